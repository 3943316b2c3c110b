#include "qmk/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmk {

namespace {
// sigma'(t) by eta-extrapolated boundary values of log(u R(u)); the
// principal branch is safe while |Im log| < pi, which holds off the real
// axis; saturated slopes approach +-1.
double sigma_prime_at(const std::function<cplx(cplx)>& R, double t, double h) {
    auto phi = [&](double eta) {
        const cplx u(t, eta);
        return std::log(u * R(u)).imag();
    };
    const double v1 = phi(4.0 * h), v2 = phi(2.0 * h), v3 = phi(h);
    const double s = (v1 - 6.0 * v2 + 8.0 * v3) / (3.0 * M_PI);
    if (!(s > -1.05 && s < 1.05))
        throw std::runtime_error("diagram extraction: log branch left the principal strip "
                                 "(|sigma'| > 1 at t = " + std::to_string(t) + ")");
    return std::clamp(s, -1.0, 1.0);
}

// Shared sigma-integration route for both R_mu- and R_psi-driven maps.
GridDiagram diagram_from_r(const std::function<cplx(cplx)>& R, double a, double b, int cells) {
    const double lo = std::min(a, 0.0), hi = std::max(b, 0.0);
    const double h = (b - a) / cells;
    const int n = std::max(32, static_cast<int>(std::ceil((hi - lo) / h)));
    const double step = (hi - lo) / n;

    std::vector<double> t(n + 1), sp(n + 1);
    for (int i = 0; i <= n; ++i) {
        t[i] = lo + step * i;
        sp[i] = sigma_prime_at(R, t[i], step);
    }

    // x0 = -int sigma'; then sigma(lo) = x0/2 and w = |x| + 2 sigma.
    const double x0 = -trapezoid(t, sp);
    std::vector<double> sigma(n + 1);
    sigma[0] = 0.5 * x0;
    for (int i = 1; i <= n; ++i) sigma[i] = sigma[i - 1] + 0.5 * step * (sp[i - 1] + sp[i]);

    const int pad = std::max(4, n / 10);
    GridDiagram w;
    w.a = a;
    w.b = b;
    w.x0 = x0;
    w.cls = DiagramClass::D;
    w.t.resize(n + 1 + 2 * pad);
    w.v.resize(w.t.size());
    for (int i = 0; i < static_cast<int>(w.t.size()); ++i) {
        const double x = lo + step * (i - pad);
        w.t[i] = x;
        if (i < pad || i > pad + n)
            w.v[i] = std::abs(x - x0);
        else
            w.v[i] = std::abs(x) + 2.0 * sigma[i - pad];
    }
    return w;
}

// G(u) = int dpsi/(u-t) recovered from R via log(1 + R); boundary densities
// must stay inside [0, 1], the principal strip of the proof.
GridDensity density_from_log1p(const std::function<cplx(cplx)>& R, double a, double b,
                               int cells, const char* who) {
    auto F = [&](cplx u) { return std::log(1.0 + R(u)); };
    auto inv = stieltjes_invert(F, a, b, cells, DensityClass::MTilde);
    if (inv.degenerate)
        throw std::runtime_error(std::string(who) + ": unexpected degenerate density");
    double maxv = 0;
    for (double x : inv.density.v) maxv = std::max(maxv, x);
    if (maxv > 1.0 + 2e-2)
        throw std::runtime_error(std::string(who) + ": output density exceeds 1 (class Mt violated)");
    for (double& x : inv.density.v) x = std::min(x, 1.0);
    return std::move(inv.density);
}
}  // namespace

InversionResult quantize(const GridDensity& psi, int cells) {
    auto F = [&psi](cplx u) { return r_psi(psi, u); };
    return stieltjes_invert(F, psi.a, psi.b, cells, DensityClass::M);
}

GridDensity dequantize(const GridDensity& mu, int cells) {
    // Theorem condition: R_mu > -1 on (-inf, a); checked at the real probes.
    for (double u : left_probes(mu.a, mu.b)) {
        const double r = r_mu(mu, cplx(u, 0.0)).real();
        if (!(r > -1.0 + 1e-12))
            throw std::runtime_error("dequantize: R_mu(u) <= -1 at u = " + std::to_string(u) +
                                     " (outside the bijection domain)");
    }
    auto R = [&mu](cplx u) { return r_mu(mu, u); };
    return density_from_log1p(R, mu.a, mu.b, cells, "dequantize");
}

GridDiagram mk_mu_to_w(const GridDensity& mu, int cells) {
    auto R = [&mu](cplx u) { return r_mu(mu, u); };
    return diagram_from_r(R, mu.a, mu.b, cells);
}

GridDensity mk_w_to_mu(const GridDiagram& w, int cells) {
    auto F = [&w](cplx u) { return r_w(w, u); };
    auto inv = stieltjes_invert(F, w.a, w.b, cells, DensityClass::M);
    if (inv.degenerate)
        throw std::runtime_error("mk_w_to_mu: transition measure degenerates to atoms");
    return std::move(inv.density);
}

GridDiagram qmk_psi_to_w(const GridDensity& psi, int cells) {
    auto R = [&psi](cplx u) { return r_psi(psi, u); };
    return diagram_from_r(R, psi.a, psi.b, cells);
}

GridDensity qmk_w_to_psi(const GridDiagram& w, int cells) {
    for (double u : left_probes(w.a, w.b)) {
        const double r = r_w(w, cplx(u, 0.0)).real();
        if (!(r > -1.0 + 1e-12))
            throw std::runtime_error("qmk_w_to_psi: R_w(u) <= -1 at a left probe (w not in class Dt)");
    }
    for (double u : right_probes(w.a, w.b)) {
        const double r = r_w(w, cplx(u, 0.0)).real();
        if (!(r > -1.0 + 1e-12))
            throw std::runtime_error("qmk_w_to_psi: R_w(u) <= -1 at a right probe (w not in class Dt)");
    }
    auto R = [&w](cplx u) { return r_w(w, u); };
    return density_from_log1p(R, w.a, w.b, cells, "qmk_w_to_psi");
}

}  // namespace qmk
