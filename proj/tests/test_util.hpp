#pragma once

#include "qmk/branching.hpp"
#include "qmk/rational.hpp"
#include "qmk/schur.hpp"
#include "qmk/signature.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace qmk_test {

// Independent dimension oracle: count Gelfand-Tsetlin patterns recursively,
// never touching the Weyl product formula.
inline qmk::Int gt_pattern_count(const qmk::Signature& s) {
    if (s.n() == 1) return 1;
    qmk::Int total = 0;
    for (const auto& mu : qmk::enumerate_interlacing(s)) total += gt_pattern_count(mu);
    return total;
}

// chi^2 quantile via the Wilson-Hilferty approximation.
inline double chi2_quantile(int dof, double z) {
    const double k = double(dof);
    const double t = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
    return k * t * t * t;
}

// Empirical frequencies vs an exact law, at the 3-sigma-equivalent level:
// Pearson chi^2 over the support against the multinomial quantile, plus a
// hard 5-sigma per-atom cap. Anything observed outside the support fails.
inline bool within_3sigma(const std::map<qmk::Signature, long long>& counts,
                          const std::vector<std::pair<qmk::Signature, qmk::Rat>>& law,
                          long long samples, double z = 3.0) {
    long long seen = 0;
    double x2 = 0;
    for (const auto& [sig, p] : law) {
        auto it = counts.find(sig);
        const long long c = (it == counts.end()) ? 0 : it->second;
        seen += c;
        const double prob = qmk::rat_to_double(p);
        const double expect = prob * double(samples);
        const double sigma = std::sqrt(std::max(prob * (1 - prob) * double(samples), 1e-300));
        if (std::abs(double(c) - expect) > 5.0 * sigma + 1e-9) return false;
        x2 += (double(c) - expect) * (double(c) - expect) / std::max(expect, 1e-300);
    }
    if (seen != samples) return false;  // mass outside the support
    const int dof = static_cast<int>(law.size()) - 1;
    if (dof == 0) return true;
    return x2 <= chi2_quantile(dof, z);
}

}  // namespace qmk_test
