#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bpsp/coloring.hpp"
#include "bpsp/instance.hpp"
#include "bpsp/ising.hpp"
#include "bpsp/lbfgs.hpp"
#include "bpsp/maxcut.hpp"
#include "bpsp/rng.hpp"
#include "bpsp/statevector.hpp"

// Depth-1 XQAOA: an independent phase angle per coupling and per-qubit mixer
// angles, state = U_Y(alpha) U_X(beta) U_ZZ(gamma) |+>.
//
// Conjugating Z_u through the mixers gives a_z Z + a_y Y + a_x X with
// a_z = cos 2a cos 2b, a_y = cos 2a sin 2b, a_x = -sin 2a. On the phased
// product state only four two-point functions survive:
//   <Z_u Y_v> = sin E * prod_w cos B_w      <Y_u Z_v> = sin E * prod_w cos A_w
//   <X_u X_v> = (C+ + C-) / 2               <Y_u Y_v> = -(C+ - C-) / 2
// with E = 2 g_uv J_uv, A_w = 2 g_uw J_uw, B_w = 2 g_vw J_vw (zero when absent)
// and C+- = prod_w cos(A_w +- B_w), products over w != u, v.
// The dense lightcone simulation below is the reference these formulas are
// tested against.

namespace bpsp {

enum class MixerKind {
    shared,  // one angle per qubit used for both the X and the Y rotation
    x,
    y,
    xy,      // independent X and Y angles
};

inline std::string_view mixer_name(MixerKind k) {
    switch (k) {
        case MixerKind::shared: return "x=y";
        case MixerKind::x: return "x";
        case MixerKind::y: return "y";
        case MixerKind::xy: return "xy";
    }
    return "?";
}

inline MixerKind parse_mixer(std::string_view s) {
    for (MixerKind k : {MixerKind::shared, MixerKind::x, MixerKind::y, MixerKind::xy}) {
        if (s == mixer_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown mixer kind '" + std::string(s) + "'");
}

struct XqaoaParams {
    MixerKind kind = MixerKind::shared;
    std::vector<double> gamma;  // one per coupling, in the Hamiltonian's order
    std::vector<double> mixer;  // n angles, or 2n for xy (all beta, then all alpha)

    static std::size_t mixer_count(MixerKind kind, int n) {
        return kind == MixerKind::xy ? 2 * static_cast<std::size_t>(n) : static_cast<std::size_t>(n);
    }

    double beta(int j) const {
        const auto i = static_cast<std::size_t>(j);
        return kind == MixerKind::y ? 0.0 : mixer[i];
    }
    double alpha(int j) const {
        const auto i = static_cast<std::size_t>(j);
        switch (kind) {
            case MixerKind::shared: return mixer[i];
            case MixerKind::x: return 0.0;
            case MixerKind::y: return mixer[i];
            case MixerKind::xy: return mixer[i + mixer.size() / 2];
        }
        return 0.0;
    }

    std::vector<double> flat() const {
        std::vector<double> v = gamma;
        v.insert(v.end(), mixer.begin(), mixer.end());
        return v;
    }

    static XqaoaParams from_flat(MixerKind kind, std::size_t couplings, const std::vector<double>& v) {
        XqaoaParams p;
        p.kind = kind;
        p.gamma.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(couplings));
        p.mixer.assign(v.begin() + static_cast<std::ptrdiff_t>(couplings), v.end());
        return p;
    }

    /// Tied angles with an X mixer: plain depth-1 QAOA.
    static XqaoaParams uniform(const IsingHamiltonian& h, double beta, double gamma) {
        XqaoaParams p;
        p.kind = MixerKind::x;
        p.gamma.assign(h.couplings().size(), gamma);
        p.mixer.assign(static_cast<std::size_t>(h.n()), beta);
        return p;
    }
};

namespace detail {

inline void check_params(const IsingHamiltonian& h, const XqaoaParams& p) {
    if (p.gamma.size() != h.couplings().size() || p.mixer.size() != XqaoaParams::mixer_count(p.kind, h.n())) {
        throw std::invalid_argument("XqaoaParams: angle count does not match the Hamiltonian");
    }
}

}  // namespace detail

/// Closed-form energy, gradient and single-qubit expectations.
class XqaoaEvaluator {
public:
    explicit XqaoaEvaluator(const IsingHamiltonian& h) : h_(h) {
        const auto& cs = h.couplings();
        const int n = h.n();
        // Coupling index of every adjacency entry, aligned with h.neighbours(v).
        std::vector<std::vector<int>> index(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            index[static_cast<std::size_t>(v)].reserve(h.neighbours(v).size());
        }
        for (std::size_t e = 0; e < cs.size(); ++e) {
            index[static_cast<std::size_t>(cs[e].u)].push_back(static_cast<int>(e));
            index[static_cast<std::size_t>(cs[e].v)].push_back(static_cast<int>(e));
        }
        // Each adjacency list is sorted by neighbour, and so is the order in
        // which couplings were appended above; reorder to match.
        for (int v = 0; v < n; ++v) {
            auto& idx = index[static_cast<std::size_t>(v)];
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                return other(cs[static_cast<std::size_t>(a)], v) < other(cs[static_cast<std::size_t>(b)], v);
            });
        }
        incident_ = index;
        begin_.reserve(cs.size() + 1);
        for (const auto& c : cs) {
            begin_.push_back(terms_.size());
            const auto& nu = h.neighbours(c.u);
            const auto& nv = h.neighbours(c.v);
            const auto& iu = index[static_cast<std::size_t>(c.u)];
            const auto& iv = index[static_cast<std::size_t>(c.v)];
            std::size_t i = 0;
            std::size_t k = 0;
            while (i < nu.size() || k < nv.size()) {
                if (i < nu.size() && nu[i].vertex == c.v) {
                    ++i;
                    continue;
                }
                if (k < nv.size() && nv[k].vertex == c.u) {
                    ++k;
                    continue;
                }
                if (k == nv.size() || (i < nu.size() && nu[i].vertex < nv[k].vertex)) {
                    terms_.push_back({iu[i++], -1});
                } else if (i == nu.size() || nv[k].vertex < nu[i].vertex) {
                    terms_.push_back({-1, iv[k++]});
                } else {
                    terms_.push_back({iu[i++], iv[k++]});
                }
            }
        }
        begin_.push_back(terms_.size());
    }

    const IsingHamiltonian& hamiltonian() const noexcept { return h_; }
    std::size_t parameter_count(MixerKind kind) const {
        return h_.couplings().size() + XqaoaParams::mixer_count(kind, h_.n());
    }

    /// Energy; when `grad` is non-null it receives d energy / d params in
    /// the flat layout (couplings first, then mixer angles).
    double evaluate(const XqaoaParams& p, std::vector<double>* grad = nullptr) {
        detail::check_params(h_, p);
        prepare(p);
        const auto& cs = h_.couplings();
        const int n = h_.n();
        if (grad != nullptr) {
            grad->assign(parameter_count(p.kind), 0.0);
            gz_.assign(static_cast<std::size_t>(n), 0.0);
            gy_.assign(static_cast<std::size_t>(n), 0.0);
            gx_.assign(static_cast<std::size_t>(n), 0.0);
        }
        double energy = h_.offset();
        for (std::size_t e = 0; e < cs.size(); ++e) {
            const auto u = static_cast<std::size_t>(cs[e].u);
            const auto v = static_cast<std::size_t>(cs[e].v);
            const double j = cs[e].value();
            const std::size_t b = begin_[e];
            const std::size_t m = begin_[e + 1] - b;

            double pu = 1.0, pv = 1.0, cp = 1.0, cm = 1.0;
            fa_.resize(m);
            for (std::size_t k = 0; k < m; ++k) {
                const Term& t = terms_[b + k];
                Factors& f = fa_[k];
                f.ca = t.ju >= 0 ? cth_[static_cast<std::size_t>(t.ju)] : 1.0;
                f.sa = t.ju >= 0 ? sth_[static_cast<std::size_t>(t.ju)] : 0.0;
                f.cb = t.jv >= 0 ? cth_[static_cast<std::size_t>(t.jv)] : 1.0;
                f.sb = t.jv >= 0 ? sth_[static_cast<std::size_t>(t.jv)] : 0.0;
                f.cp = f.ca * f.cb - f.sa * f.sb;
                f.cm = f.ca * f.cb + f.sa * f.sb;
                pu *= f.ca;
                pv *= f.cb;
                cp *= f.cp;
                cm *= f.cm;
            }
            const double se = sth_[e];
            const double ce = cth_[e];
            const double xx = 0.5 * (cp + cm);
            const double yy = -0.5 * (cp - cm);
            const double zy = se * pv;
            const double yz = se * pu;
            energy += j * (az_[u] * ay_[v] * zy + ay_[u] * az_[v] * yz + ax_[u] * ax_[v] * xx + ay_[u] * ay_[v] * yy);
            if (grad == nullptr) {
                continue;
            }

            auto& g = *grad;
            const double c1 = az_[u] * ay_[v];
            const double c2 = ay_[u] * az_[v];
            const double kp = 0.5 * (ax_[u] * ax_[v] - ay_[u] * ay_[v]);  // coefficient of C+
            const double km = 0.5 * (ax_[u] * ax_[v] + ay_[u] * ay_[v]);  // coefficient of C-
            g[e] += j * ce * (c1 * pv + c2 * pu) * static_cast<double>(cs[e].j2);

            leave_one_out(m);
            for (std::size_t k = 0; k < m; ++k) {
                const Term& t = terms_[b + k];
                const Factors& f = fa_[k];
                const double s_plus = f.sa * f.cb + f.ca * f.sb;
                const double s_minus = f.sa * f.cb - f.ca * f.sb;
                const double d_cp = -s_plus * lcp_[k];
                const double d_cm = -s_minus * lcm_[k];
                if (t.ju >= 0) {
                    const double dfa = se * c2 * (-f.sa) * lpu_[k] + kp * d_cp + km * d_cm;
                    g[static_cast<std::size_t>(t.ju)] += j * dfa * static_cast<double>(cs[static_cast<std::size_t>(t.ju)].j2);
                }
                if (t.jv >= 0) {
                    const double dfb = se * c1 * (-f.sb) * lpv_[k] + kp * d_cp - km * d_cm;
                    g[static_cast<std::size_t>(t.jv)] += j * dfb * static_cast<double>(cs[static_cast<std::size_t>(t.jv)].j2);
                }
            }
            gz_[u] += j * zy * ay_[v];
            gy_[u] += j * (yz * az_[v] + yy * ay_[v]);
            gx_[u] += j * xx * ax_[v];
            gz_[v] += j * yz * ay_[u];
            gy_[v] += j * (zy * az_[u] + yy * ay_[u]);
            gx_[v] += j * xx * ax_[u];
        }
        if (grad != nullptr) {
            mixer_chain_rule(p, *grad);
        }
        return energy;
    }

    /// <Z_j> for every qubit: a_x(j) * prod over incident couplings of cos(2 g J).
    std::vector<double> z_expectations(const XqaoaParams& p) {
        detail::check_params(h_, p);
        prepare(p);
        std::vector<double> z(static_cast<std::size_t>(h_.n()));
        for (int v = 0; v < h_.n(); ++v) {
            double prod = 1.0;
            for (int e : incident_[static_cast<std::size_t>(v)]) {
                prod *= cth_[static_cast<std::size_t>(e)];
            }
            z[static_cast<std::size_t>(v)] = ax_[static_cast<std::size_t>(v)] * prod;
        }
        return z;
    }

private:
    struct Term {
        int ju;  // coupling index of (u, w), or -1
        int jv;  // coupling index of (v, w), or -1
    };
    struct Factors {
        double ca, sa, cb, sb, cp, cm;
    };

    static int other(const Coupling& c, int v) { return c.u == v ? c.v : c.u; }

    void prepare(const XqaoaParams& p) {
        const auto& cs = h_.couplings();
        cth_.resize(cs.size());
        sth_.resize(cs.size());
        for (std::size_t e = 0; e < cs.size(); ++e) {
            const double theta = p.gamma[e] * static_cast<double>(cs[e].j2);
            cth_[e] = std::cos(theta);
            sth_[e] = std::sin(theta);
        }
        const auto n = static_cast<std::size_t>(h_.n());
        az_.resize(n);
        ay_.resize(n);
        ax_.resize(n);
        c2a_.resize(n);
        s2a_.resize(n);
        c2b_.resize(n);
        s2b_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double a = p.alpha(static_cast<int>(j));
            const double b = p.beta(static_cast<int>(j));
            c2a_[j] = std::cos(2.0 * a);
            s2a_[j] = std::sin(2.0 * a);
            c2b_[j] = std::cos(2.0 * b);
            s2b_[j] = std::sin(2.0 * b);
            az_[j] = c2a_[j] * c2b_[j];
            ay_[j] = c2a_[j] * s2b_[j];
            ax_[j] = -s2a_[j];
        }
    }

    // Products of all factors but one, without dividing (factors can vanish).
    void leave_one_out(std::size_t m) {
        lpu_.assign(m, 1.0);
        lpv_.assign(m, 1.0);
        lcp_.assign(m, 1.0);
        lcm_.assign(m, 1.0);
        double a = 1.0, b = 1.0, c = 1.0, d = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            lpu_[k] = a;
            lpv_[k] = b;
            lcp_[k] = c;
            lcm_[k] = d;
            a *= fa_[k].ca;
            b *= fa_[k].cb;
            c *= fa_[k].cp;
            d *= fa_[k].cm;
        }
        a = b = c = d = 1.0;
        for (std::size_t k = m; k-- > 0;) {
            lpu_[k] *= a;
            lpv_[k] *= b;
            lcp_[k] *= c;
            lcm_[k] *= d;
            a *= fa_[k].ca;
            b *= fa_[k].cb;
            c *= fa_[k].cp;
            d *= fa_[k].cm;
        }
    }

    void mixer_chain_rule(const XqaoaParams& p, std::vector<double>& g) const {
        const std::size_t base = h_.couplings().size();
        const auto n = static_cast<std::size_t>(h_.n());
        for (std::size_t j = 0; j < n; ++j) {
            const double d_beta = gz_[j] * (-2.0 * c2a_[j] * s2b_[j]) + gy_[j] * (2.0 * c2a_[j] * c2b_[j]);
            const double d_alpha = gz_[j] * (-2.0 * s2a_[j] * c2b_[j]) + gy_[j] * (-2.0 * s2a_[j] * s2b_[j]) +
                                   gx_[j] * (-2.0 * c2a_[j]);
            switch (p.kind) {
                case MixerKind::shared: g[base + j] = d_beta + d_alpha; break;
                case MixerKind::x: g[base + j] = d_beta; break;
                case MixerKind::y: g[base + j] = d_alpha; break;
                case MixerKind::xy:
                    g[base + j] = d_beta;
                    g[base + n + j] = d_alpha;
                    break;
            }
        }
    }

    const IsingHamiltonian& h_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::size_t> begin_;
    std::vector<Term> terms_;

    std::vector<double> cth_, sth_;
    std::vector<double> az_, ay_, ax_, c2a_, s2a_, c2b_, s2b_;
    std::vector<double> gz_, gy_, gx_;
    std::vector<Factors> fa_;
    std::vector<double> lpu_, lpv_, lcp_, lcm_;
};

inline double xqaoa_energy(const IsingHamiltonian& h, const XqaoaParams& p) {
    XqaoaEvaluator ev(h);
    return ev.evaluate(p);
}

inline std::vector<double> xqaoa_gradient(const IsingHamiltonian& h, const XqaoaParams& p) {
    XqaoaEvaluator ev(h);
    std::vector<double> g;
    ev.evaluate(p, &g);
    return g;
}

// ---- Dense reference path ------------------------------------------------

/// Full-system circuit for the dense simulator (n <= 20).
inline CircuitSpec xqaoa_circuit(const IsingHamiltonian& h, const XqaoaParams& p) {
    detail::check_params(h, p);
    CircuitSpec s;
    s.n = h.n();
    s.offset = h.offset();
    const auto& cs = h.couplings();
    for (std::size_t e = 0; e < cs.size(); ++e) {
        s.phases.push_back({cs[e].u, cs[e].v, p.gamma[e], cs[e].value()});
    }
    for (int j = 0; j < h.n(); ++j) {
        s.beta.push_back(p.beta(j));
        s.alpha.push_back(p.alpha(j));
    }
    return s;
}

namespace detail {

/// Dense simulation restricted to `qubits` and every coupling inside it.
/// Expectations of operators on `focus` qubits are exact when `qubits`
/// contains the focus qubits and all their neighbours.
inline QuantumStateReport lightcone_report(const IsingHamiltonian& h, const XqaoaParams& p,
                                           const std::set<int>& qubits, std::vector<std::pair<int, int>> pairs) {
    if (qubits.size() > static_cast<std::size_t>(statevector_limit)) {
        throw std::invalid_argument("lightcone of " + std::to_string(qubits.size()) + " qubits exceeds " +
                                    std::to_string(statevector_limit));
    }
    std::vector<int> local(static_cast<std::size_t>(h.n()), -1);
    CircuitSpec s;
    s.n = static_cast<int>(qubits.size());
    for (int q : qubits) {
        local[static_cast<std::size_t>(q)] = static_cast<int>(s.beta.size());
        s.beta.push_back(p.beta(q));
        s.alpha.push_back(p.alpha(q));
    }
    const auto& cs = h.couplings();
    for (std::size_t e = 0; e < cs.size(); ++e) {
        const int a = local[static_cast<std::size_t>(cs[e].u)];
        const int b = local[static_cast<std::size_t>(cs[e].v)];
        if (a >= 0 && b >= 0) {
            s.phases.push_back({a, b, p.gamma[e], cs[e].value()});
        }
    }
    for (auto& [u, v] : pairs) {
        u = local[static_cast<std::size_t>(u)];
        v = local[static_cast<std::size_t>(v)];
    }
    return simulate_p1(s, pairs);
}

inline std::set<int> closed_neighbourhood(const IsingHamiltonian& h, std::initializer_list<int> roots) {
    std::set<int> out;
    for (int r : roots) {
        out.insert(r);
        for (const auto& nb : h.neighbours(r)) {
            out.insert(nb.vertex);
        }
    }
    return out;
}

}  // namespace detail

/// <Z_u Z_v> by dense simulation of the pair's lightcone.
inline double xqaoa_pair_lightcone(const IsingHamiltonian& h, const XqaoaParams& p, int u, int v) {
    detail::check_params(h, p);
    if (u < 0 || v < 0 || u >= h.n() || v >= h.n() || u == v) {
        throw std::out_of_range("xqaoa_pair_lightcone: bad pair");
    }
    return detail::lightcone_report(h, p, detail::closed_neighbourhood(h, {u, v}), {{u, v}}).pair_zz[0];
}

inline double xqaoa_z_lightcone(const IsingHamiltonian& h, const XqaoaParams& p, int j) {
    detail::check_params(h, p);
    const auto qubits = detail::closed_neighbourhood(h, {j});
    const auto r = detail::lightcone_report(h, p, qubits, {});
    return r.z[static_cast<std::size_t>(std::distance(qubits.begin(), qubits.find(j)))];
}

/// Energy with every two-point function taken from its lightcone simulation.
inline double xqaoa_energy_lightcone(const IsingHamiltonian& h, const XqaoaParams& p) {
    double e = h.offset();
    for (const auto& c : h.couplings()) {
        e += c.value() * xqaoa_pair_lightcone(h, p, c.u, c.v);
    }
    return e;
}

// ---- Optimization and rounding -------------------------------------------

struct XqaoaRestart {
    XqaoaParams params;
    double energy = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct XqaoaRun {
    std::vector<XqaoaRestart> restarts;
    std::size_t best = 0;  // index of the lowest energy
    const XqaoaRestart& best_restart() const { return restarts.at(best); }
};

inline XqaoaParams xqaoa_random_params(const IsingHamiltonian& h, MixerKind kind, Seed seed) {
    constexpr double pi = std::numbers::pi;
    Rng rng(seed);
    XqaoaParams p;
    p.kind = kind;
    p.gamma.resize(h.couplings().size());
    for (double& g : p.gamma) {
        g = rng.uniform(-pi, pi);
    }
    p.mixer.resize(XqaoaParams::mixer_count(kind, h.n()));
    for (double& m : p.mixer) {
        m = rng.uniform(0.0, pi);
    }
    return p;
}

/// Multi-start L-BFGS. Restart r starts from xqaoa_random_params with seed
/// derive_seed(seed, {r}), so a longer run extends a shorter one.
inline XqaoaRun xqaoa_optimize(const IsingHamiltonian& h, int restarts, Seed seed,
                               MixerKind kind = MixerKind::shared, const LbfgsOptions& options = {}) {
    if (restarts < 1) {
        throw std::invalid_argument("xqaoa_optimize: restarts must be at least 1");
    }
    XqaoaEvaluator ev(h);
    const std::size_t couplings = h.couplings().size();
    XqaoaRun run;
    run.restarts.reserve(static_cast<std::size_t>(restarts));
    for (int r = 0; r < restarts; ++r) {
        const XqaoaParams start = xqaoa_random_params(h, kind, derive_seed(seed, {static_cast<std::uint64_t>(r)}));
        auto fg = [&](const std::vector<double>& x, std::vector<double>& g) {
            return ev.evaluate(XqaoaParams::from_flat(kind, couplings, x), &g);
        };
        const LbfgsResult res = lbfgs_minimize(fg, start.flat(), options);
        run.restarts.push_back({XqaoaParams::from_flat(kind, couplings, res.x), res.value, res.iterations, res.converged});
        if (res.value < run.restarts[run.best].energy) {
            run.best = run.restarts.size() - 1;
        }
    }
    return run;
}

/// Sign of <Z_j>; values within 1e-9 of zero round to +1.
inline SpinAssignment extract_cut(const IsingHamiltonian& h, const XqaoaParams& p) {
    XqaoaEvaluator ev(h);
    SpinAssignment s;
    for (double z : ev.z_expectations(p)) {
        s.spins.push_back(z <= -1e-9 ? -1 : 1);
    }
    return s;
}

struct XqaoaSolution {
    Solution solution;
    std::vector<int> restart_costs;  // rounded cost of every restart, in order
    double best_energy = 0.0;        // lowest optimized energy over restarts
};

/// Optimizes, rounds every restart, and keeps the cheapest rounded colouring
/// (earliest restart on ties). Costs are exact swap counts.
inline XqaoaSolution xqaoa_solve(const BpspInstance& x, int restarts, Seed seed, MixerKind kind = MixerKind::shared) {
    const IsingHamiltonian h = build_ising(x);
    const XqaoaRun run = xqaoa_optimize(h, restarts, seed, kind);
    XqaoaSolution out;
    out.best_energy = run.best_restart().energy;
    int best_cost = 0;
    IccColoring best_icc;
    for (std::size_t r = 0; r < run.restarts.size(); ++r) {
        const SpinAssignment s = extract_cut(h, run.restarts[r].params);
        const int cost = icc_swap_count_spin(x, s);
        out.restart_costs.push_back(cost);
        if (r == 0 || cost < best_cost) {
            best_cost = cost;
            best_icc = to_icc(s);
        }
    }
    out.solution = Solution{best_cost, expand(x, best_icc)};
    return out;
}

/// XQAOA on the MaxCut Ising form of a graph, rounding the lowest-energy restart.
class XqaoaMaxCut final : public MaxCutBackend {
public:
    XqaoaMaxCut(int restarts, Seed seed, MixerKind kind = MixerKind::shared)
        : restarts_(restarts), seed_(seed), kind_(kind) {}
    MaxCutResult solve(const BpspGraph& g) const override {
        const IsingHamiltonian h = maxcut_ising(g);
        const XqaoaRun run = xqaoa_optimize(h, restarts_, seed_, kind_);
        const SpinAssignment s = extract_cut(h, run.best_restart().params);
        return MaxCutResult{cut_weight(g, s), to_icc(s)};
    }

private:
    int restarts_;
    Seed seed_;
    MixerKind kind_;
};

}  // namespace bpsp
