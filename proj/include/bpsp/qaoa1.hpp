#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bpsp/ising.hpp"

// Depth-1 QAOA with a shared phase angle gamma and shared X-mixer angle beta.
//
// For a coupled pair (u, v) with E = 2 gamma J_uv,
//   <Z_u Z_v> = sin(4b)/2 * sin(E) * (P_u + P_v) - sin^2(2b)/2 * (Pi+ - Pi-)
// where P_u is the product of cos(2 gamma J_uw) over the other neighbours w
// of u, and Pi+- the product of cos(2 gamma (J_uw +- J_vw)) over all
// w != u, v. Couplings are half-integers, so 2 gamma J = gamma * j2 with an
// integer j2 and all cosines come from a table of cos(k gamma).

namespace bpsp {

struct Qaoa1Params {
    double beta = 0.0;
    double gamma = 0.0;
};

struct Qaoa1Result {
    Qaoa1Params params;
    double energy = 0.0;
};

namespace detail {

inline double wrap_angle(double x, double lo, double period) {
    double r = std::fmod(x - lo, period);
    if (r < 0.0) {
        r += period;
    }
    return lo + r;
}

}  // namespace detail

/// Precomputed neighbourhood structure of every coupled pair.
class Qaoa1Evaluator {
public:
    explicit Qaoa1Evaluator(const IsingHamiltonian& h) : h_(h) {
        const auto& cs = h.couplings();
        edges_.reserve(cs.size());
        for (const auto& c : cs) {
            EdgeTerms e;
            e.j2 = note(c.j2);
            e.p_begin = single_.size();
            for (const auto& nb : h.neighbours(c.u)) {
                if (nb.vertex != c.v) {
                    single_.push_back(note(nb.j2));
                }
            }
            e.p_mid = single_.size();
            for (const auto& nb : h.neighbours(c.v)) {
                if (nb.vertex != c.u) {
                    single_.push_back(note(nb.j2));
                }
            }
            e.p_end = single_.size();
            e.pm_begin = paired_.size();
            merge_neighbourhoods(c.u, c.v);
            e.pm_end = paired_.size();
            edges_.push_back(e);
        }
        cos_.resize(static_cast<std::size_t>(k_max_) + 1);
        sin_.resize(static_cast<std::size_t>(k_max_) + 1);
    }

    const IsingHamiltonian& hamiltonian() const noexcept { return h_; }

    /// energy(beta, gamma) = offset + a sin(4 beta) + b sin^2(2 beta).
    struct Coefficients {
        double a = 0.0;
        double b = 0.0;
    };

    Coefficients coefficients(double gamma) {
        fill_tables(gamma);
        Coefficients out;
        for (const auto& e : edges_) {
            const double j = 0.5 * static_cast<double>(e.j2);
            double pu = 1.0;
            for (std::size_t i = e.p_begin; i < e.p_mid; ++i) {
                pu *= cos_k(single_[i]);
            }
            double pv = 1.0;
            for (std::size_t i = e.p_mid; i < e.p_end; ++i) {
                pv *= cos_k(single_[i]);
            }
            double plus = 1.0;
            double minus = 1.0;
            for (std::size_t i = e.pm_begin; i < e.pm_end; ++i) {
                plus *= cos_k(paired_[i].plus);
                minus *= cos_k(paired_[i].minus);
            }
            out.a += j * 0.5 * sin_k(e.j2) * (pu + pv);
            out.b -= j * 0.5 * (plus - minus);
        }
        return out;
    }

    /// Energy minimized over beta for fixed gamma, with the minimizing beta.
    Qaoa1Result best_beta(double gamma) {
        const Coefficients c = coefficients(gamma);
        const double r = std::sqrt(c.a * c.a + 0.25 * c.b * c.b);
        const double t = std::atan2(-c.a, 0.5 * c.b);
        Qaoa1Result out;
        out.params.beta = detail::wrap_angle(0.25 * t, 0.0, std::numbers::pi);
        out.params.gamma = detail::wrap_angle(gamma, -std::numbers::pi, 2.0 * std::numbers::pi);
        out.energy = h_.offset() + 0.5 * c.b - r;
        return out;
    }

    double energy(const Qaoa1Params& p) {
        const Coefficients c = coefficients(p.gamma);
        const double s2 = std::sin(2.0 * p.beta);
        return h_.offset() + c.a * std::sin(4.0 * p.beta) + c.b * s2 * s2;
    }

    /// <Z_u Z_v> for every coupling, in the Hamiltonian's coupling order.
    std::vector<double> coupled_correlations(const Qaoa1Params& p) {
        fill_tables(p.gamma);
        const double s4 = std::sin(4.0 * p.beta);
        const double s2 = std::sin(2.0 * p.beta);
        std::vector<double> out;
        out.reserve(edges_.size());
        for (const auto& e : edges_) {
            double pu = 1.0;
            for (std::size_t i = e.p_begin; i < e.p_mid; ++i) {
                pu *= cos_k(single_[i]);
            }
            double pv = 1.0;
            for (std::size_t i = e.p_mid; i < e.p_end; ++i) {
                pv *= cos_k(single_[i]);
            }
            double plus = 1.0;
            double minus = 1.0;
            for (std::size_t i = e.pm_begin; i < e.pm_end; ++i) {
                plus *= cos_k(paired_[i].plus);
                minus *= cos_k(paired_[i].minus);
            }
            out.push_back(0.5 * s4 * sin_k(e.j2) * (pu + pv) - 0.5 * s2 * s2 * (plus - minus));
        }
        return out;
    }

private:
    struct EdgeTerms {
        long j2 = 0;
        std::size_t p_begin = 0, p_mid = 0, p_end = 0;
        std::size_t pm_begin = 0, pm_end = 0;
    };
    struct PairedTerm {
        long plus;
        long minus;
    };

    long note(long k) {
        k_max_ = std::max(k_max_, std::labs(k));
        return k;
    }

    // Neighbour lists are sorted by vertex, so a linear merge visits the
    // union of both neighbourhoods once.
    void merge_neighbourhoods(int u, int v) {
        const auto& nu = h_.neighbours(u);
        const auto& nv = h_.neighbours(v);
        std::size_t i = 0;
        std::size_t k = 0;
        while (i < nu.size() || k < nv.size()) {
            if (i < nu.size() && nu[i].vertex == v) {
                ++i;
                continue;
            }
            if (k < nv.size() && nv[k].vertex == u) {
                ++k;
                continue;
            }
            long ju = 0;
            long jv = 0;
            if (k == nv.size() || (i < nu.size() && nu[i].vertex < nv[k].vertex)) {
                ju = nu[i++].j2;
            } else if (i == nu.size() || nv[k].vertex < nu[i].vertex) {
                jv = nv[k++].j2;
            } else {
                ju = nu[i++].j2;
                jv = nv[k++].j2;
            }
            paired_.push_back({note(ju + jv), note(ju - jv)});
        }
    }

    void fill_tables(double gamma) {
        for (std::size_t k = 0; k < cos_.size(); ++k) {
            const double x = gamma * static_cast<double>(k);
            cos_[k] = std::cos(x);
            sin_[k] = std::sin(x);
        }
    }

    double cos_k(long k) const { return cos_[static_cast<std::size_t>(std::labs(k))]; }
    double sin_k(long k) const {
        const double s = sin_[static_cast<std::size_t>(std::labs(k))];
        return k < 0 ? -s : s;
    }

    const IsingHamiltonian& h_;
    std::vector<EdgeTerms> edges_;
    std::vector<long> single_;
    std::vector<PairedTerm> paired_;
    long k_max_ = 1;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// <Z_u Z_v> of the depth-1 state for any pair, coupled or not.
inline double qaoa1_pair_expectation(const IsingHamiltonian& h, const Qaoa1Params& p, int u, int v) {
    if (u < 0 || v < 0 || u >= h.n() || v >= h.n() || u == v) {
        throw std::out_of_range("qaoa1_pair_expectation: bad pair");
    }
    const double g = p.gamma;
    const long juv = h.j2(u, v);
    double pu = 1.0;
    for (const auto& nb : h.neighbours(u)) {
        if (nb.vertex != v) {
            pu *= std::cos(g * static_cast<double>(nb.j2));
        }
    }
    double pv = 1.0;
    for (const auto& nb : h.neighbours(v)) {
        if (nb.vertex != u) {
            pv *= std::cos(g * static_cast<double>(nb.j2));
        }
    }
    double plus = 1.0;
    double minus = 1.0;
    for (int w = 0; w < h.n(); ++w) {
        if (w == u || w == v) {
            continue;
        }
        const long a = h.j2(u, w);
        const long b = h.j2(v, w);
        if (a == 0 && b == 0) {
            continue;
        }
        plus *= std::cos(g * static_cast<double>(a + b));
        minus *= std::cos(g * static_cast<double>(a - b));
    }
    const double s2 = std::sin(2.0 * p.beta);
    return 0.5 * std::sin(4.0 * p.beta) * std::sin(g * static_cast<double>(juv)) * (pu + pv) -
           0.5 * s2 * s2 * (plus - minus);
}

inline double qaoa1_energy(const IsingHamiltonian& h, const Qaoa1Params& p) {
    Qaoa1Evaluator ev(h);
    return ev.energy(p);
}

inline constexpr int qaoa1_grid_points = 1024;

/// Grid over gamma in [-pi, pi) with beta solved in closed form at every
/// point, then golden-section refinement around the best grid point.
inline Qaoa1Result qaoa1_optimize(Qaoa1Evaluator& ev) {
    constexpr double pi = std::numbers::pi;
    const double step = 2.0 * pi / qaoa1_grid_points;
    Qaoa1Result best = ev.best_beta(-pi);
    int best_i = 0;
    for (int i = 1; i < qaoa1_grid_points; ++i) {
        const Qaoa1Result r = ev.best_beta(-pi + step * i);
        if (r.energy < best.energy) {
            best = r;
            best_i = i;
        }
    }
    const double centre = -pi + step * best_i;
    double lo = centre - step;
    double hi = centre + step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = ev.best_beta(x1).energy;
    double f2 = ev.best_beta(x2).energy;
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = ev.best_beta(x1).energy;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = ev.best_beta(x2).energy;
        }
    }
    const Qaoa1Result refined = ev.best_beta(0.5 * (lo + hi));
    return refined.energy <= best.energy ? refined : best;
}

inline Qaoa1Result qaoa1_optimize(const IsingHamiltonian& h) {
    Qaoa1Evaluator ev(h);
    return qaoa1_optimize(ev);
}

}  // namespace bpsp
