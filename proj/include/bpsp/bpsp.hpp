#pragma once

#include "bpsp/rng.hpp"
#include "bpsp/instance.hpp"
#include "bpsp/coloring.hpp"
#include "bpsp/heuristics.hpp"
#include "bpsp/graph.hpp"
#include "bpsp/ising.hpp"
#include "bpsp/brute_force.hpp"
#include "bpsp/maxcut.hpp"
#include "bpsp/statevector.hpp"
#include "bpsp/qaoa1.hpp"
#include "bpsp/lbfgs.hpp"
#include "bpsp/xqaoa.hpp"
#include "bpsp/rqaoa.hpp"
#include "bpsp/solvers.hpp"
#include "bpsp/bench.hpp"
#include "bpsp/validate.hpp"
