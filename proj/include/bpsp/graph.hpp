#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bpsp/coloring.hpp"
#include "bpsp/instance.hpp"

namespace bpsp {

struct WeightedEdge {
    int u = 0;  // 0-based, u < v
    int v = 0;
    int weight = 0;
    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Weighted graph on cars. Vertices are 0..n-1 (car symbol minus one).
class BpspGraph {
public:
    BpspGraph() = default;

    /// Builds a graph from an edge list; edges are canonicalized (u < v) and
    /// sorted. Duplicates, self-loops and zero weights are rejected.
    BpspGraph(int n, std::vector<WeightedEdge> edges) : n_(n), edges_(std::move(edges)) {
        for (auto& e : edges_) {
            if (e.u > e.v) {
                std::swap(e.u, e.v);
            }
            if (e.u == e.v || e.u < 0 || e.v >= n_ || e.weight == 0) {
                throw std::invalid_argument("BpspGraph: bad edge");
            }
        }
        std::sort(edges_.begin(), edges_.end(),
                  [](const WeightedEdge& a, const WeightedEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
                throw std::invalid_argument("BpspGraph: duplicate edge");
            }
        }
        adjacency_.assign(static_cast<std::size_t>(n_), {});
        for (const auto& e : edges_) {
            adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight});
            adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight});
        }
    }

    struct Neighbour {
        int vertex;
        int weight;
    };

    int n() const noexcept { return n_; }
    const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
    const std::vector<Neighbour>& neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) {
            d = std::max(d, degree(v));
        }
        return d;
    }

private:
    int n_ = 0;
    std::vector<WeightedEdge> edges_;
    std::vector<std::vector<Neighbour>> adjacency_;
};

/// theta of an unordered pair of cars {a, b} (0-based): minus the signed
/// count of boundaries joining a and b, each boundary signed by (-1)^eta.
inline int theta(const BpspInstance& x, int a, int b) {
    int value = 0;
    for (std::size_t k = 0; k + 1 < x.length(); ++k) {
        const int p = x.car(k);
        const int q = x.car(k + 1);
        if ((p == a && q == b) || (p == b && q == a)) {
            value -= eta(x, k) != 0 ? -1 : 1;
        }
    }
    return value;
}

inline BpspGraph build_graph(const BpspInstance& x) {
    std::vector<WeightedEdge> raw;
    raw.reserve(x.length());
    for (std::size_t k = 0; k + 1 < x.length(); ++k) {
        int u = x.car(k);
        int v = x.car(k + 1);
        if (u == v) {
            continue;
        }
        if (u > v) {
            std::swap(u, v);
        }
        raw.push_back({u, v, eta(x, k) != 0 ? 1 : -1});
    }
    std::sort(raw.begin(), raw.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    std::vector<WeightedEdge> merged;
    for (const auto& e : raw) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
            merged.back().weight += e.weight;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const WeightedEdge& e) { return e.weight == 0; });
    return BpspGraph(x.n(), std::move(merged));
}

inline long total_weight(const BpspGraph& g) {
    long sum = 0;
    for (const auto& e : g.edges()) {
        sum += e.weight;
    }
    return sum;
}

inline long cut_weight(const BpspGraph& g, const IccColoring& z) {
    detail::require_length(z.size(), static_cast<std::size_t>(g.n()), "cut_weight");
    long sum = 0;
    for (const auto& e : g.edges()) {
        if (z.colours[static_cast<std::size_t>(e.u)] != z.colours[static_cast<std::size_t>(e.v)]) {
            sum += e.weight;
        }
    }
    return sum;
}

inline long cut_weight(const BpspGraph& g, const SpinAssignment& z) { return cut_weight(g, to_icc(z)); }

/// "n m" header then one "u v w" line per edge, 1-based vertices.
inline void write_graph(std::ostream& out, const BpspGraph& g) {
    out << g.n() << ' ' << g.edges().size() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
    }
}

}  // namespace bpsp
