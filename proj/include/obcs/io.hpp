#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "obcs/graph.hpp"

namespace obcs {

enum class GraphFormat { dimacs, edgelist };

inline std::string format_name(GraphFormat f) {
    return f == GraphFormat::dimacs ? "dimacs" : "edgelist";
}

inline GraphFormat parse_format(const std::string& name) {
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edgelist") return GraphFormat::edgelist;
    throw std::invalid_argument("unknown graph format '" + name + "'");
}

namespace detail {

// Shortest decimal string that parses back to exactly the same double.
// Integral values come out without a decimal point.
inline std::string format_weight(double w) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, w);
        if (std::stod(buf) == w) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

inline int parse_vertex_token(const std::string& tok, int n, int line) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected a vertex id, got '" + tok + "'", line);
    }
    if (pos != tok.size()) throw ParseError("expected a vertex id, got '" + tok + "'", line);
    if (v < 1 || v > n) throw ParseError("vertex id " + tok + " out of range 1.." + std::to_string(n), line);
    return static_cast<int>(v - 1);
}

}  // namespace detail

// DIMACS-style reader: 'c' comments, one 'p edge <n> <m>' header, 'e <u> <v>'
// edge lines and optional 'n <v> <w>' weight lines, all 1-based. Vertices
// without a weight line default to weight 1 when any weight line is present.
inline Graph load_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::map<Vertex, double> weight_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        const std::string& tag = toks[0];
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError("second problem line", lineno);
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError("expected 'p edge <n> <m>'", lineno);
            try {
                n = std::stoi(toks[2]);
                m = std::stoll(toks[3]);
            } catch (const std::exception&) {
                throw ParseError("expected 'p edge <n> <m>'", lineno);
            }
            if (n < 0 || m < 0) throw ParseError("negative size in problem line", lineno);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("'" + tag + "' line before the problem line", lineno);
        if (tag == "e") {
            if (toks.size() != 3) throw ParseError("expected 'e <u> <v>'", lineno);
            Vertex u = detail::parse_vertex_token(toks[1], n, lineno);
            Vertex v = detail::parse_vertex_token(toks[2], n, lineno);
            if (u == v)
                throw ValidationError("self-loop at vertex " + toks[1] + " (line " +
                                      std::to_string(lineno) + ")");
            Edge e{std::min(u, v), std::max(u, v)};
            if (!seen.insert(e).second)
                throw ValidationError("duplicate edge (" + std::to_string(e.first + 1) + "," +
                                      std::to_string(e.second + 1) + ") at line " +
                                      std::to_string(lineno));
            edges.push_back(e);
            continue;
        }
        if (tag == "n") {
            if (toks.size() != 3) throw ParseError("expected 'n <v> <w>'", lineno);
            Vertex v = detail::parse_vertex_token(toks[1], n, lineno);
            double w = 0.0;
            try {
                size_t pos = 0;
                w = std::stod(toks[2], &pos);
                if (pos != toks[2].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("expected a numeric weight, got '" + toks[2] + "'", lineno);
            }
            if (!(w > 0.0))
                throw ValidationError("non-positive weight at vertex " + toks[1] + " (line " +
                                      std::to_string(lineno) + ")");
            if (!weight_lines.emplace(v, w).second)
                throw ValidationError("duplicate weight line for vertex " + toks[1] + " (line " +
                                      std::to_string(lineno) + ")");
            continue;
        }
        throw ParseError("unknown line type '" + tag + "'", lineno);
    }
    if (!have_header) throw ParseError("missing 'p edge' problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("problem line announces " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were given");
    std::optional<std::vector<double>> weights;
    if (!weight_lines.empty()) {
        weights.emplace(static_cast<size_t>(n), 1.0);
        for (const auto& [v, w] : weight_lines) (*weights)[static_cast<size_t>(v)] = w;
    }
    return Graph::from_edges(n, std::move(edges), std::move(weights));
}

// Plain edge list: first non-blank line is the vertex count, every following
// line one '<u> <v>' pair, 1-based. No weights.
inline Graph load_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_n = false;
    int n = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        if (!have_n) {
            if (toks.size() != 1) throw ParseError("expected the vertex count on its own line", lineno);
            try {
                n = std::stoi(toks[0]);
            } catch (const std::exception&) {
                throw ParseError("expected the vertex count, got '" + toks[0] + "'", lineno);
            }
            if (n < 0) throw ParseError("negative vertex count", lineno);
            have_n = true;
            continue;
        }
        if (toks.size() != 2) throw ParseError("expected '<u> <v>'", lineno);
        Vertex u = detail::parse_vertex_token(toks[0], n, lineno);
        Vertex v = detail::parse_vertex_token(toks[1], n, lineno);
        if (u == v)
            throw ValidationError("self-loop at vertex " + toks[0] + " (line " +
                                  std::to_string(lineno) + ")");
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw ValidationError("duplicate edge (" + std::to_string(e.first + 1) + "," +
                                  std::to_string(e.second + 1) + ") at line " +
                                  std::to_string(lineno));
        edges.push_back(e);
    }
    if (!have_n) throw ParseError("missing vertex count line");
    return Graph::from_edges(n, std::move(edges));
}

inline Graph load_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::dimacs ? load_dimacs(in) : load_edgelist(in);
}

inline Graph load_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return load_graph(in, format);
}

// Canonical serialization: header, weight lines (when weighted) in vertex
// order, then edges sorted lexicographically. Loading the output reproduces
// the graph bit for bit, and equal graphs serialize to equal bytes.
inline std::string serialize(const Graph& g, GraphFormat format = GraphFormat::dimacs) {
    std::ostringstream out;
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        if (g.weighted())
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                out << "n " << v + 1 << ' ' << detail::format_weight(g.weight(v)) << '\n';
        for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        if (g.weighted())
            throw std::invalid_argument("the edge list format cannot carry vertex weights");
        out << g.vertex_count() << '\n';
        for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

inline void write_graph_file(const Graph& g, const std::string& path,
                             GraphFormat format = GraphFormat::dimacs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << serialize(g, format);
}

// Solution sets travel as whitespace-separated 1-based vertex ids; lines
// starting with '#' are comments, so solver output can be fed straight back.
inline VertexSet parse_vertex_list(std::istream& in, const Graph& g) {
    VertexSet s;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') continue;
        std::istringstream is(line);
        std::string tok;
        while (is >> tok) {
            long v = 0;
            size_t pos = 0;
            try {
                v = std::stol(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("expected a vertex id, got '" + tok + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("expected a vertex id, got '" + tok + "'");
            if (v < 1 || v > g.vertex_count())
                throw std::invalid_argument("vertex id " + tok + " outside the graph");
            s.push_back(static_cast<Vertex>(v - 1));
        }
    }
    return canonical_set(std::move(s));
}

inline VertexSet parse_vertex_list_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return parse_vertex_list(in, g);
}

inline std::string format_vertex_list(const VertexSet& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << s[i] + 1;
    }
    out << '\n';
    return out.str();
}

}  // namespace obcs
