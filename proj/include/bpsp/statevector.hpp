#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bpsp/coloring.hpp"
#include "bpsp/rng.hpp"

// Dense depth-1 circuit simulator, the ground truth for every analytic and
// lightcone evaluation. Qubit j is bit j of the basis index; bit value 0 is
// z = +1 (red). Rotations are exp(-i theta P).

namespace bpsp {

inline constexpr int statevector_limit = 20;

struct PhaseTerm {
    int u = 0;
    int v = 0;
    double gamma = 0.0;
    double coupling = 0.0;  // J_uv; the gate is exp(-i gamma J Z_u Z_v)
};

struct CircuitSpec {
    int n = 0;
    double offset = 0.0;  // constant added to the reported energy
    std::vector<PhaseTerm> phases;
    std::vector<double> beta;   // X rotation per qubit
    std::vector<double> alpha;  // Y rotation per qubit, may be empty
};

struct QuantumStateReport {
    std::vector<double> z;             // <Z_j>
    std::vector<double> pair_zz;       // <Z_u Z_v> for the requested pairs, in order
    double energy = 0.0;               // offset + sum J <Z_u Z_v> over the phase terms
    double norm = 0.0;
};

class StateVector {
public:
    explicit StateVector(const CircuitSpec& spec) : n_(spec.n) {
        validate(spec);
        const std::size_t dim = std::size_t{1} << n_;
        const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
        amps_.assign(dim, std::complex<double>(amp, 0.0));
        apply_phases(spec);
        for (int j = 0; j < n_; ++j) {
            apply_x(j, spec.beta[static_cast<std::size_t>(j)]);
        }
        if (!spec.alpha.empty()) {
            for (int j = 0; j < n_; ++j) {
                apply_y(j, spec.alpha[static_cast<std::size_t>(j)]);
            }
        }
    }

    int n() const noexcept { return n_; }
    const std::vector<std::complex<double>>& amplitudes() const noexcept { return amps_; }

    std::vector<double> probabilities() const {
        std::vector<double> p(amps_.size());
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            p[i] = std::norm(amps_[i]);
        }
        return p;
    }

private:
    static void validate(const CircuitSpec& spec) {
        if (spec.n < 1 || spec.n > statevector_limit) {
            throw std::invalid_argument("StateVector: n = " + std::to_string(spec.n) + " outside [1, " +
                                        std::to_string(statevector_limit) + "]");
        }
        if (spec.beta.size() != static_cast<std::size_t>(spec.n) ||
            (!spec.alpha.empty() && spec.alpha.size() != static_cast<std::size_t>(spec.n))) {
            throw std::invalid_argument("StateVector: mixer angle count mismatch");
        }
        auto finite = [](double a) { return std::isfinite(a); };
        if (!std::all_of(spec.beta.begin(), spec.beta.end(), finite) ||
            !std::all_of(spec.alpha.begin(), spec.alpha.end(), finite)) {
            throw std::invalid_argument("StateVector: non-finite mixer angle");
        }
        for (const auto& t : spec.phases) {
            if (t.u < 0 || t.v < 0 || t.u >= spec.n || t.v >= spec.n || t.u == t.v || !finite(t.gamma) ||
                !finite(t.coupling)) {
                throw std::invalid_argument("StateVector: malformed phase term");
            }
        }
    }

    void apply_phases(const CircuitSpec& spec) {
        for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
            double theta = 0.0;
            for (const auto& t : spec.phases) {
                const bool differ = (((idx >> t.u) ^ (idx >> t.v)) & 1U) != 0;
                theta += differ ? -t.gamma * t.coupling : t.gamma * t.coupling;
            }
            amps_[idx] *= std::complex<double>(std::cos(theta), -std::sin(theta));
        }
    }

    template <class Mix>
    void apply_single(int q, Mix&& mix) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
            if ((idx & bit) == 0) {
                mix(amps_[idx], amps_[idx | bit]);
            }
        }
    }

    void apply_x(int q, double beta) {
        const double c = std::cos(beta);
        const std::complex<double> mis(0.0, -std::sin(beta));
        apply_single(q, [&](std::complex<double>& a0, std::complex<double>& a1) {
            const auto b0 = c * a0 + mis * a1;
            const auto b1 = mis * a0 + c * a1;
            a0 = b0;
            a1 = b1;
        });
    }

    void apply_y(int q, double alpha) {
        const double c = std::cos(alpha);
        const double s = std::sin(alpha);
        apply_single(q, [&](std::complex<double>& a0, std::complex<double>& a1) {
            const auto b0 = c * a0 - s * a1;
            const auto b1 = s * a0 + c * a1;
            a0 = b0;
            a1 = b1;
        });
    }

    int n_ = 0;
    std::vector<std::complex<double>> amps_;
};

inline QuantumStateReport simulate_p1(const CircuitSpec& spec, const std::vector<std::pair<int, int>>& pairs = {}) {
    const StateVector state(spec);
    const std::vector<double> p = state.probabilities();
    const int n = spec.n;
    QuantumStateReport r;
    r.z.assign(static_cast<std::size_t>(n), 0.0);
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
        r.norm += p[idx];
        for (int j = 0; j < n; ++j) {
            r.z[static_cast<std::size_t>(j)] += ((idx >> j) & 1U) != 0 ? -p[idx] : p[idx];
        }
    }
    auto zz = [&](int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::out_of_range("simulate_p1: pair out of range");
        }
        double sum = 0.0;
        for (std::size_t idx = 0; idx < p.size(); ++idx) {
            sum += (((idx >> u) ^ (idx >> v)) & 1U) != 0 ? -p[idx] : p[idx];
        }
        return sum;
    };
    r.pair_zz.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        r.pair_zz.push_back(zz(u, v));
    }
    r.energy = spec.offset;
    for (const auto& t : spec.phases) {
        r.energy += t.coupling * zz(t.u, t.v);
    }
    return r;
}

inline SpinAssignment spins_of_index(std::size_t idx, int n) {
    SpinAssignment s;
    s.spins.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        s.spins.push_back(((idx >> j) & 1U) != 0 ? -1 : 1);
    }
    return s;
}

/// I.i.d. computational-basis samples of the prepared state.
inline std::vector<SpinAssignment> sample_bitstrings(const StateVector& state, std::size_t count, Seed seed) {
    const std::vector<double> p = state.probabilities();
    std::vector<double> cumulative(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cumulative[i] = acc;
    }
    Rng rng(seed);
    std::vector<SpinAssignment> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double r = rng.uniform01() * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        if (it == cumulative.end()) {
            --it;
        }
        out.push_back(spins_of_index(static_cast<std::size_t>(it - cumulative.begin()), state.n()));
    }
    return out;
}

inline std::vector<SpinAssignment> sample_bitstrings(const CircuitSpec& spec, std::size_t count, Seed seed) {
    return sample_bitstrings(StateVector(spec), count, seed);
}

}  // namespace bpsp
