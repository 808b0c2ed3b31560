#pragma once

#include "bpsp/brute_force.hpp"
#include "bpsp/coloring.hpp"
#include "bpsp/graph.hpp"
#include "bpsp/heuristics.hpp"
#include "bpsp/instance.hpp"

namespace bpsp {

/// Weighted MaxCut solver, exact or heuristic.
class MaxCutBackend {
public:
    virtual ~MaxCutBackend() = default;
    virtual MaxCutResult solve(const BpspGraph& g) const = 0;
};

class BruteForceMaxCut final : public MaxCutBackend {
public:
    MaxCutResult solve(const BpspGraph& g) const override { return maxcut_bruteforce(g); }
};

/// Paint shop cost through MaxCut: the red-first cost minus the cut weight.
/// With an exact backend this is the optimum.
inline Solution bpsp_via_maxcut(const BpspInstance& x, const MaxCutBackend& backend) {
    const BpspGraph g = build_graph(x);
    const MaxCutResult r = backend.solve(g);
    const int cost = swap_count(red_first(x)) - static_cast<int>(cut_weight(g, r.cut));
    return Solution{cost, expand(x, r.cut)};
}

}  // namespace bpsp
