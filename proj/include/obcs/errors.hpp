#pragma once

#include <stdexcept>
#include <string>

namespace obcs {

// Input stream could not be parsed. Carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg)
        : std::runtime_error("parse error: " + msg), line_(0) {}
    ParseError(const std::string& msg, int line)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Structurally readable input that violates a graph invariant
// (self-loop, duplicate edge, non-positive weight, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A size guard refused an operation that would blow up (exact search on a
// graph above its limit, a reduction chain above its budget).
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid experiment configuration, reported before any run starts.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A certified guarantee failed at runtime. This indicates a bug in a solver
// or in the harness, never a property of the input.
class BoundViolation : public std::logic_error {
public:
    explicit BoundViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace obcs
