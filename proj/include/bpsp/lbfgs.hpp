#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <vector>

namespace bpsp {

struct LbfgsOptions {
    std::size_t memory = 10;
    int max_iterations = 500;
    double gradient_tolerance = 1e-6;  // on the infinity norm
    double armijo = 1e-4;
    double wolfe = 0.9;  // curvature constant
    int max_backtracks = 60;
};

struct LbfgsResult {
    std::vector<double> x;
    double value = 0.0;
    double gradient_norm = 0.0;  // infinity norm at x
    int iterations = 0;
    bool converged = false;
};

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline double inf_norm(const std::vector<double>& a) {
    double m = 0.0;
    for (double v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace detail

/// Limited-memory BFGS with a weak Wolfe line search.
/// `fg(x, grad)` returns f(x) and writes the gradient into `grad`.
template <class ValueAndGradient>
LbfgsResult lbfgs_minimize(ValueAndGradient&& fg, std::vector<double> x, const LbfgsOptions& opt = {}) {
    using detail::dot;
    const std::size_t d = x.size();
    std::vector<double> g(d);
    double f = fg(x, g);

    struct Pair {
        std::vector<double> s, y;
        double rho;
    };
    std::deque<Pair> memory;
    std::vector<double> dir(d), x_new(d), g_new(d), alpha(opt.memory);

    LbfgsResult out;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        if (detail::inf_norm(g) < opt.gradient_tolerance) {
            out.converged = true;
            break;
        }

        // Two-loop recursion.
        dir = g;
        for (std::size_t k = memory.size(); k-- > 0;) {
            alpha[k] = memory[k].rho * dot(memory[k].s, dir);
            for (std::size_t i = 0; i < d; ++i) {
                dir[i] -= alpha[k] * memory[k].y[i];
            }
        }
        if (!memory.empty()) {
            const auto& last = memory.back();
            const double scale = dot(last.s, last.y) / dot(last.y, last.y);
            for (double& v : dir) {
                v *= scale;
            }
        }
        for (std::size_t k = 0; k < memory.size(); ++k) {
            const double beta = memory[k].rho * dot(memory[k].y, dir);
            for (std::size_t i = 0; i < d; ++i) {
                dir[i] += (alpha[k] - beta) * memory[k].s[i];
            }
        }
        for (double& v : dir) {
            v = -v;
        }
        double slope = dot(g, dir);
        if (!(slope < 0.0)) {
            memory.clear();
            for (std::size_t i = 0; i < d; ++i) {
                dir[i] = -g[i];
            }
            slope = dot(g, dir);
        }

        // Weak Wolfe bracketing: halve on insufficient decrease, double while
        // the slope is still steep. Guarantees s.y > 0 for the update.
        double step = 1.0;
        double lo = 0.0;
        double hi = 0.0;  // 0 means no upper bound yet
        double f_new = f;
        bool accepted = false;
        std::vector<double> x_ok, g_ok;
        double f_ok = f;
        for (int bt = 0; bt <= opt.max_backtracks; ++bt) {
            for (std::size_t i = 0; i < d; ++i) {
                x_new[i] = x[i] + step * dir[i];
            }
            f_new = fg(x_new, g_new);
            if (!(f_new <= f + opt.armijo * step * slope)) {
                hi = step;
            } else if (dot(g_new, dir) < opt.wolfe * slope) {
                x_ok = x_new;
                g_ok = g_new;
                f_ok = f_new;
                lo = step;
            } else {
                accepted = true;
                break;
            }
            step = hi > 0.0 ? 0.5 * (lo + hi) : 2.0 * lo;
        }
        if (!accepted && !x_ok.empty()) {
            // Sufficient decrease without the curvature condition; still progress.
            x_new = x_ok;
            g_new = g_ok;
            f_new = f_ok;
            accepted = true;
        }
        if (!accepted) {
            if (memory.empty()) {
                break;  // even steepest descent makes no progress
            }
            memory.clear();
            continue;
        }

        Pair p{std::vector<double>(d), std::vector<double>(d), 0.0};
        for (std::size_t i = 0; i < d; ++i) {
            p.s[i] = x_new[i] - x[i];
            p.y[i] = g_new[i] - g[i];
        }
        const double sy = dot(p.s, p.y);
        if (sy > 1e-12 * std::sqrt(dot(p.s, p.s) * dot(p.y, p.y))) {
            p.rho = 1.0 / sy;
            memory.push_back(std::move(p));
            if (memory.size() > opt.memory) {
                memory.pop_front();
            }
        }
        x.swap(x_new);
        g.swap(g_new);
        f = f_new;
    }
    if (!out.converged && detail::inf_norm(g) < opt.gradient_tolerance) {
        out.converged = true;
    }
    out.x = std::move(x);
    out.value = f;
    out.gradient_norm = detail::inf_norm(g);
    out.iterations = it;
    return out;
}

}  // namespace bpsp
