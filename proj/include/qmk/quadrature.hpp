#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qmk {

// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration
// on the Legendre recurrence.
inline const std::pair<std::vector<double>, std::vector<double>>& gl_rule(int n = 15) {
    static auto rule = [](int m) {
        std::vector<double> x(m), w(m);
        for (int i = 0; i < m; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (m + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= m; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = m * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = m * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        return std::make_pair(x, w);
    }(n);
    return rule;
}

template <class F>
auto gl_panel(F&& f, double a, double b) -> decltype(f(a)) {
    const auto& [x, w] = gl_rule();
    decltype(f(a)) acc{};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < x.size(); ++i) acc += w[i] * f(mid + half * x[i]);
    return half * acc;
}

// Adaptive bisection against the two-half refinement; abs_tol is distributed
// across the recursion.
template <class F>
auto adaptive_gl(F&& f, double a, double b, double abs_tol = 1e-11, int max_depth = 30)
    -> decltype(f(a)) {
    auto whole = gl_panel(f, a, b);
    struct Rec {
        F& f;
        int max_depth;
        decltype(f(std::declval<double>())) run(double a, double b, decltype(whole) est,
                                                double tol, int depth) {
            const double mid = 0.5 * (a + b);
            auto left = gl_panel(f, a, mid);
            auto right = gl_panel(f, mid, b);
            if (depth >= max_depth) return left + right;
            if (std::abs(left + right - est) <= tol) return left + right;
            return run(a, mid, left, 0.5 * tol, depth + 1) +
                   run(mid, b, right, 0.5 * tol, depth + 1);
        }
    } rec{f, max_depth};
    return rec.run(a, b, whole, abs_tol, 0);
}

}  // namespace qmk
