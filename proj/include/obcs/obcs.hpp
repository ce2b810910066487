#pragma once

// Umbrella header for the bounded component set toolkit.

#include "obcs/errors.hpp"
#include "obcs/exact.hpp"
#include "obcs/experiment.hpp"
#include "obcs/feasibility.hpp"
#include "obcs/gnp.hpp"
#include "obcs/graph.hpp"
#include "obcs/greedy.hpp"
#include "obcs/io.hpp"
#include "obcs/local_ratio.hpp"
#include "obcs/reductions.hpp"
