#include "qmk/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmk {

namespace {
// eta levels {4h, 2h, h} with Richardson weights (1, -6, 8)/3: kills the
// O(eta) and O(eta^2) terms of the Poisson smoothing.
double extrapolated_density(const std::function<cplx(cplx)>& F, double t, double h) {
    const double v1 = F(cplx(t, 4.0 * h)).imag();
    const double v2 = F(cplx(t, 2.0 * h)).imag();
    const double v3 = F(cplx(t, h)).imag();
    return -(v1 - 6.0 * v2 + 8.0 * v3) / (3.0 * M_PI);
}
}  // namespace

InversionResult stieltjes_invert(const std::function<cplx(cplx)>& F, double a, double b,
                                 int cells, DensityClass cls) {
    if (!(b > a)) throw std::invalid_argument("stieltjes_invert: need a < b");
    if (cells < 32) throw std::invalid_argument("stieltjes_invert: grid too coarse");
    const double h = (b - a) / cells;

    // positive-measure probe check: Im F(t + i eta) = -pi * smoothed density
    for (int i = 1; i <= 5; ++i) {
        const double t = a + (b - a) * i / 6.0;
        if (F(cplx(t, 4.0 * h)).imag() > 1e-7)
            throw std::runtime_error("stieltjes_invert: Im F > 0 in the upper half-plane "
                                     "(not the transform of a positive measure)");
    }

    const int pad = 16;
    std::vector<double> t(cells + 1 + 2 * pad), d(cells + 1 + 2 * pad);
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
        t[i] = a + h * (i - pad);
        d[i] = extrapolated_density(F, t[i], h);
    }

    double min_d = 0, max_d = 0;
    for (double x : d) {
        min_d = std::min(min_d, x);
        max_d = std::max(max_d, x);
    }
    if (min_d < -5e-3 * std::max(1.0, max_d))
        throw std::runtime_error("stieltjes_invert: inversion produced a significantly negative density");
    for (double& x : d) x = std::max(x, 0.0);

    InversionResult result;
    // Mass concentration: a point mass of weight m peaks near 1.75 m/(pi h).
    if (max_d * h > 0.1) {
        result.degenerate = true;
        const double thresh = 0.05 / h;
        int i = 0;
        const int n = static_cast<int>(d.size());
        while (i < n) {
            if (d[i] < thresh) {
                ++i;
                continue;
            }
            int j = i;
            while (j + 1 < n && d[j + 1] >= thresh) ++j;
            const int lo = std::max(0, i - 8), hi = std::min(n - 1, j + 8);
            double mass = 0, centroid = 0;
            for (int q = lo; q < hi; ++q) {
                const double cellmass = 0.5 * (d[q] + d[q + 1]) * h;
                mass += cellmass;
                centroid += cellmass * 0.5 * (t[q] + t[q + 1]);
            }
            if (mass > 1e-6) result.atoms.emplace_back(centroid / mass, mass);
            i = j + 1;
        }
        result.note = "degenerate output: mass concentrates on atoms";
        return result;
    }

    GridDensity g;
    g.a = a;
    g.b = b;
    g.cls = cls;
    g.t.assign(t.begin() + pad, t.end() - pad);
    g.v.assign(d.begin() + pad, d.end() - pad);
    const double mass = g.mass();
    if (std::abs(mass - 1.0) > 0.02)
        throw std::runtime_error("stieltjes_invert: recovered mass " + std::to_string(mass) +
                                 " is not a probability density");
    // the eta-smoothing leaks O(h^{3/2}) mass past the edges; scale it back
    for (double& x : g.v) x /= mass;
    result.density = std::move(g);
    return result;
}

}  // namespace qmk
