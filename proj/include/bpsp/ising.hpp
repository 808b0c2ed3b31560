#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bpsp/coloring.hpp"
#include "bpsp/graph.hpp"
#include "bpsp/instance.hpp"

namespace bpsp {

/// Coupling stored in half units: the coefficient is j2 / 2.
struct Coupling {
    int u = 0;  // u < v
    int v = 0;
    long j2 = 0;
    double value() const noexcept { return 0.5 * static_cast<double>(j2); }
    friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// H(z) = offset + sum_{u<v} J_uv z_u z_v, every coefficient an integer
/// multiple of 1/2 and stored as twice its value so arithmetic stays exact.
class IsingHamiltonian {
public:
    struct Neighbour {
        int vertex;
        long j2;
    };

    IsingHamiltonian() = default;

    /// Parallel couplings on the same pair are summed; zero sums are dropped.
    IsingHamiltonian(int n, long offset2, std::vector<Coupling> couplings) : n_(n), offset2_(offset2) {
        if (n < 0) {
            throw std::invalid_argument("IsingHamiltonian: negative size");
        }
        for (auto& c : couplings) {
            if (c.u > c.v) {
                std::swap(c.u, c.v);
            }
            if (c.u == c.v || c.u < 0 || c.v >= n) {
                throw std::invalid_argument("IsingHamiltonian: bad coupling pair");
            }
        }
        std::sort(couplings.begin(), couplings.end(),
                  [](const Coupling& a, const Coupling& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (const auto& c : couplings) {
            if (!couplings_.empty() && couplings_.back().u == c.u && couplings_.back().v == c.v) {
                couplings_.back().j2 += c.j2;
            } else {
                couplings_.push_back(c);
            }
        }
        std::erase_if(couplings_, [](const Coupling& c) { return c.j2 == 0; });
        adjacency_.assign(static_cast<std::size_t>(n_), {});
        for (const auto& c : couplings_) {
            adjacency_[static_cast<std::size_t>(c.u)].push_back({c.v, c.j2});
            adjacency_[static_cast<std::size_t>(c.v)].push_back({c.u, c.j2});
        }
    }

    int n() const noexcept { return n_; }
    long offset2() const noexcept { return offset2_; }
    double offset() const noexcept { return 0.5 * static_cast<double>(offset2_); }
    const std::vector<Coupling>& couplings() const noexcept { return couplings_; }
    const std::vector<Neighbour>& neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

    /// Twice the coefficient of z_u z_v (0 when uncoupled).
    long j2(int u, int v) const {
        for (const auto& nb : neighbours(u)) {
            if (nb.vertex == v) {
                return nb.j2;
            }
        }
        return 0;
    }

    /// Twice the energy, exact.
    long energy2(const SpinAssignment& z) const {
        detail::require_length(z.size(), static_cast<std::size_t>(n_), "IsingHamiltonian::energy");
        long e = offset2_;
        for (const auto& c : couplings_) {
            e += c.j2 * z.spins[static_cast<std::size_t>(c.u)] * z.spins[static_cast<std::size_t>(c.v)];
        }
        return e;
    }

    double energy(const SpinAssignment& z) const { return 0.5 * static_cast<double>(energy2(z)); }

private:
    int n_ = 0;
    long offset2_ = 0;
    std::vector<Coupling> couplings_;
    std::vector<std::vector<Neighbour>> adjacency_;
};

/// Swap-count Hamiltonian of an instance: energy(z) = icc_swap_count_spin(x, z).
/// Boundaries between the two occurrences of one car are constants and go to
/// the offset.
inline IsingHamiltonian build_ising(const BpspInstance& x) {
    long offset2 = 2L * x.n() - 1;
    std::vector<Coupling> raw;
    for (std::size_t k = 0; k + 1 < x.length(); ++k) {
        const int sign = eta(x, k) != 0 ? -1 : 1;
        const int u = x.car(k);
        const int v = x.car(k + 1);
        if (u == v) {
            offset2 -= sign;
        } else {
            raw.push_back({u, v, -sign});
        }
    }
    return IsingHamiltonian(x.n(), offset2, std::move(raw));
}

/// Minimizing this Hamiltonian maximizes the cut: energy(z) = -cut_weight(G, z).
inline IsingHamiltonian maxcut_ising(const BpspGraph& g) {
    std::vector<Coupling> raw;
    raw.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        raw.push_back({e.u, e.v, e.weight});
    }
    return IsingHamiltonian(g.n(), -total_weight(g), std::move(raw));
}

namespace detail {

inline void write_half(std::ostream& out, long twice) {
    const long g = std::gcd(twice, 2L);
    out << twice / g << ' ' << 2 / g;
}

}  // namespace detail

/// "n offset_num offset_den" then "u v j_num j_den" per coupling (1-based,
/// reduced fractions, positive denominators).
inline void write_ising(std::ostream& out, const IsingHamiltonian& h) {
    out << h.n() << ' ';
    detail::write_half(out, h.offset2());
    out << '\n';
    for (const auto& c : h.couplings()) {
        out << c.u + 1 << ' ' << c.v + 1 << ' ';
        detail::write_half(out, c.j2);
        out << '\n';
    }
}

}  // namespace bpsp
