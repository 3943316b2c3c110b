#include "qmk/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmk {

std::vector<double> left_probes(double a, double b) {
    const double L = std::max(b - a, 1e-6);
    return {a - 0.55 * L, a - 1.05 * L, a - 2.05 * L};
}

std::vector<double> right_probes(double a, double b) {
    const double L = std::max(b - a, 1e-6);
    return {b + 0.55 * L, b + 1.05 * L, b + 2.05 * L};
}

std::vector<cplx> standard_probe_set(double a, double b) {
    const double L = std::max(b - a, 1e-6);
    const double c = 0.5 * (a + b);
    std::vector<cplx> probes;
    for (double u : left_probes(a, b)) probes.emplace_back(u, 0.0);
    for (double u : right_probes(a, b)) probes.emplace_back(u, 0.0);
    probes.emplace_back(c, 0.55 * L);
    probes.emplace_back(c, 1.1 * L);
    probes.emplace_back(c, 2.2 * L);
    probes.emplace_back(c, -0.55 * L);
    probes.emplace_back(a - 0.55 * L, 0.55 * L);
    probes.emplace_back(b + 0.55 * L, 0.55 * L);
    return probes;
}

namespace {
void reject_on_support(double a, double b, cplx u, const char* who) {
    if (u.imag() == 0.0 && u.real() >= a - 1e-300 && u.real() <= b + 1e-300)
        throw std::invalid_argument(std::string(who) + ": real probe inside the support interval");
}
}  // namespace

cplx cauchy_G(const GridDensity& psi, cplx u) {
    reject_on_support(psi.a, psi.b, u, "cauchy_G");
    // cell [t0,t1], linear values f0 -> f1:
    // int (alpha + beta t)/(u - t) dt = (f0 + beta (u - t0)) log((u-t0)/(u-t1)) - beta h
    cplx acc = 0.0;
    const size_t n = psi.t.size();
    for (size_t j = 0; j + 1 < n; ++j) {
        const double t0 = psi.t[j], t1 = psi.t[j + 1];
        const double f0 = psi.v[j], f1 = psi.v[j + 1];
        if (f0 == 0.0 && f1 == 0.0) continue;
        const double h = t1 - t0;
        const double beta = (f1 - f0) / h;
        const cplx u0 = u - t0, u1 = u - t1;
        acc += (f0 + beta * u0) * std::log(u0 / u1) - beta * h;
    }
    return acc;
}

cplx r_psi(const GridDensity& psi, cplx u) { return std::exp(cauchy_G(psi, u)) - 1.0; }

cplx r_mu(const GridDensity& mu, cplx u) { return cauchy_G(mu, u); }

namespace {
// int_{t0}^{t1} slope/(t-u) dt with constant slope, principal value for real
// u inside (t0,t1) handled by the caller through the sign factor.
cplx slope_log_term(double slope, double t0, double t1, cplx u) {
    if (slope == 0.0) return 0.0;
    if (u.imag() == 0.0) {
        const double x = u.real();
        return slope * std::log(std::abs((t1 - x) / (t0 - x)));
    }
    return slope * std::log((t1 - u) / (t0 - u));
}
}  // namespace

cplx r_w(const GridDiagram& w, cplx u) {
    if (u == cplx(0.0, 0.0)) throw std::invalid_argument("r_w: u = 0 hits the prefactor pole");
    reject_on_support(w.a, w.b, u, "r_w");

    // sigma slopes per cell from the grid inside [a,b]; breakpoints at a, b
    // and at the |x| corner so no difference straddles a kink.
    std::vector<double> cuts;
    cuts.push_back(w.a);
    for (double x : w.t)
        if (x > w.a + 1e-12 && x < w.b - 1e-12) cuts.push_back(x);
    if (0.0 > w.a + 1e-12 && 0.0 < w.b - 1e-12) cuts.push_back(0.0);
    cuts.push_back(w.b);
    std::sort(cuts.begin(), cuts.end());

    auto sigma_at = [&](double x) { return 0.5 * (w.value_at(x) - std::abs(x)); };

    cplx integral = 0.0;
    double s_prev = sigma_at(cuts.front());
    for (size_t j = 0; j + 1 < cuts.size(); ++j) {
        const double t0 = cuts[j], t1 = cuts[j + 1];
        if (t1 - t0 < 1e-14) continue;
        const double s_next = sigma_at(t1);
        const double slope = (s_next - s_prev) / (t1 - t0);
        integral += slope_log_term(slope, t0, t1, u);
        s_prev = s_next;
    }

    // Closed-form contribution of the segment between 0 and [a,b], where the
    // tail behavior w = |t - x0| pins sigma' to -1 or +1.
    bool pv_region = false;
    if (w.a > 0.0) {
        integral += slope_log_term(-1.0, 0.0, w.a, u);
        if (u.imag() == 0.0 && u.real() > 0.0 && u.real() < w.a) pv_region = true;
    } else if (w.b < 0.0) {
        integral += slope_log_term(1.0, w.b, 0.0, u);
        if (u.imag() == 0.0 && u.real() > w.b && u.real() < 0.0) pv_region = true;
    }

    cplx value = std::exp(integral) / u;
    // principal-value continuation carries a factor exp(-i pi sigma') = -1
    if (pv_region) value = -value;
    return value;
}

}  // namespace qmk
