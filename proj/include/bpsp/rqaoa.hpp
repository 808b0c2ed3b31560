#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpsp/brute_force.hpp"
#include "bpsp/coloring.hpp"
#include "bpsp/instance.hpp"
#include "bpsp/ising.hpp"
#include "bpsp/maxcut.hpp"
#include "bpsp/qaoa1.hpp"

namespace bpsp {

inline constexpr int rqaoa_default_cutoff = 8;
inline constexpr double rqaoa_degenerate_threshold = 1e-12;

/// Z_v = sign * Z_u, imposed when v was eliminated.
struct Constraint {
    int v = 0;
    int u = 0;
    int sign = 1;
    double magnitude = 0.0;  // |M_uv| at the time of elimination
    bool degenerate = false;
};

/// Ising Hamiltonian over a shrinking set of the original variables.
class ContractedIsing {
public:
    explicit ContractedIsing(const IsingHamiltonian& h)
        : n_(h.n()), offset2_(h.offset2()), active_(static_cast<std::size_t>(h.n()), 1),
          adj_(static_cast<std::size_t>(h.n())), remaining_(h.n()) {
        for (const auto& c : h.couplings()) {
            adj_[static_cast<std::size_t>(c.u)][c.v] = c.j2;
            adj_[static_cast<std::size_t>(c.v)][c.u] = c.j2;
        }
    }

    int original_size() const noexcept { return n_; }
    int active_count() const noexcept { return remaining_; }
    long offset2() const noexcept { return offset2_; }
    bool is_active(int v) const { return active_[static_cast<std::size_t>(v)] != 0; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

    std::vector<int> active_vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(remaining_));
        for (int v = 0; v < n_; ++v) {
            if (is_active(v)) {
                out.push_back(v);
            }
        }
        return out;
    }

    /// The active part relabelled 0..k-1 in increasing original order, so
    /// lexicographic order of pairs is preserved.
    IsingHamiltonian compact() const {
        std::vector<int> local(static_cast<std::size_t>(n_), -1);
        int k = 0;
        for (int v = 0; v < n_; ++v) {
            if (is_active(v)) {
                local[static_cast<std::size_t>(v)] = k++;
            }
        }
        std::vector<Coupling> cs;
        for (int v = 0; v < n_; ++v) {
            for (const auto& [w, j2] : adj_[static_cast<std::size_t>(v)]) {
                if (v < w) {
                    cs.push_back({local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)], j2});
                }
            }
        }
        return IsingHamiltonian(k, offset2_, std::move(cs));
    }

    /// Substitutes Z_v = sign * Z_u (u, v active, v != u) and records it.
    void eliminate(int v, int u, int sign, double magnitude, bool degenerate) {
        if (v == u || !is_active(v) || !is_active(u) || (sign != 1 && sign != -1)) {
            throw std::invalid_argument("ContractedIsing::eliminate: bad constraint");
        }
        auto& nv = adj_[static_cast<std::size_t>(v)];
        auto& nu = adj_[static_cast<std::size_t>(u)];
        for (const auto& [w, j2] : nv) {
            auto& nw = adj_[static_cast<std::size_t>(w)];
            nw.erase(v);
            if (w == u) {
                // J_uv z_u z_v becomes the constant sign * J_uv.
                offset2_ += sign * j2;
                continue;
            }
            const long merged = (nu.count(w) != 0 ? nu[w] : 0) + sign * j2;
            if (merged == 0) {
                nu.erase(w);
                nw.erase(u);
            } else {
                nu[w] = merged;
                nw[u] = merged;
            }
        }
        nv.clear();
        active_[static_cast<std::size_t>(v)] = 0;
        --remaining_;
        constraints_.push_back({v, u, sign, magnitude, degenerate});
    }

    /// Extends an assignment of the active variables (in active_vertices()
    /// order) to all original variables by replaying constraints backwards.
    SpinAssignment replay(const SpinAssignment& active_spins) const {
        const auto act = active_vertices();
        detail::require_length(active_spins.size(), act.size(), "ContractedIsing::replay");
        SpinAssignment full{std::vector<int>(static_cast<std::size_t>(n_), 0)};
        for (std::size_t i = 0; i < act.size(); ++i) {
            full.spins[static_cast<std::size_t>(act[i])] = active_spins.spins[i];
        }
        for (auto it = constraints_.rbegin(); it != constraints_.rend(); ++it) {
            full.spins[static_cast<std::size_t>(it->v)] = it->sign * full.spins[static_cast<std::size_t>(it->u)];
        }
        return full;
    }

private:
    int n_;
    long offset2_;
    std::vector<unsigned char> active_;
    std::vector<std::map<int, long>> adj_;
    int remaining_;
    std::vector<Constraint> constraints_;
};

/// One recursion step: optimize QAOA_1 on the active Hamiltonian, take the
/// coupled pair with the largest |<Z_u Z_v>| (first in lexicographic order
/// on ties) and eliminate its larger label. Without any correlation above
/// the threshold the first coupled pair is tied with sign +1. Returns the
/// constraint, or nothing when no couplings remain.
inline std::optional<Constraint> rqaoa_step(ContractedIsing& c) {
    if (c.active_count() < 2) {
        throw std::invalid_argument("rqaoa_step: fewer than two active variables");
    }
    const IsingHamiltonian h = c.compact();
    if (h.couplings().empty()) {
        return std::nullopt;
    }
    Qaoa1Evaluator ev(h);
    const Qaoa1Result opt = qaoa1_optimize(ev);
    const std::vector<double> m = ev.coupled_correlations(opt.params);
    std::size_t best = 0;
    for (std::size_t e = 1; e < m.size(); ++e) {
        if (std::abs(m[e]) > std::abs(m[best])) {
            best = e;
        }
    }
    const auto labels = c.active_vertices();
    const Coupling& pair = h.couplings()[best];
    const int u = labels[static_cast<std::size_t>(pair.u)];
    const int v = labels[static_cast<std::size_t>(pair.v)];
    const double mag = std::abs(m[best]);
    const bool degenerate = mag < rqaoa_degenerate_threshold;
    const int sign = degenerate || m[best] > 0.0 ? 1 : -1;
    c.eliminate(v, u, sign, mag, degenerate);
    return c.constraints().back();
}

struct RqaoaResult {
    SpinAssignment spins;
    long energy2 = 0;  // twice the energy of `spins` under the input Hamiltonian
    std::vector<Constraint> constraints;
};

/// "step u v sign |M|" with 1-based labels.
inline void write_trace(std::ostream& out, const std::vector<Constraint>& steps) {
    for (const auto& s : steps) {
        out << "step " << s.u + 1 << ' ' << s.v + 1 << ' ' << (s.sign > 0 ? "+1" : "-1") << ' ' << s.magnitude
            << '\n';
    }
}

inline RqaoaResult rqaoa_minimize(const IsingHamiltonian& h, int cutoff = rqaoa_default_cutoff) {
    if (cutoff < 1 || cutoff > brute_force_limit) {
        throw std::invalid_argument("rqaoa: cutoff must lie in [1, " + std::to_string(brute_force_limit) + "]");
    }
    ContractedIsing c(h);
    bool uncoupled = false;
    while (c.active_count() > cutoff) {
        if (!rqaoa_step(c)) {
            uncoupled = true;
            break;
        }
    }
    SpinAssignment active;
    if (uncoupled) {
        active.spins.assign(static_cast<std::size_t>(c.active_count()), 1);
    } else {
        active = ising_ground_state(c.compact()).spins;
    }
    RqaoaResult out;
    out.spins = c.replay(active);
    out.energy2 = h.energy2(out.spins);
    out.constraints = c.constraints();
    return out;
}

inline Solution rqaoa_solve(const BpspInstance& x, int cutoff = rqaoa_default_cutoff,
                            std::vector<Constraint>* trace = nullptr) {
    RqaoaResult r = rqaoa_minimize(build_ising(x), cutoff);
    if (trace != nullptr) {
        *trace = r.constraints;
    }
    return Solution{icc_swap_count_spin(x, r.spins), expand(x, to_icc(r.spins))};
}

/// RQAOA on the MaxCut Ising form of a graph.
class RqaoaMaxCut final : public MaxCutBackend {
public:
    explicit RqaoaMaxCut(int cutoff = rqaoa_default_cutoff) : cutoff_(cutoff) {}
    MaxCutResult solve(const BpspGraph& g) const override {
        const RqaoaResult r = rqaoa_minimize(maxcut_ising(g), cutoff_);
        return MaxCutResult{cut_weight(g, r.spins), to_icc(r.spins)};
    }

private:
    int cutoff_;
};

}  // namespace bpsp
