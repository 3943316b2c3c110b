#include "qmk/transform.hpp"

#include <cmath>

namespace qmk {

MembershipReport membership_checks(const GridDensity& psi) {
    MembershipReport rep;
    rep.mass = psi.mass();
    rep.mass_ok = std::abs(rep.mass - 1.0) <= 1e-3;
    if (!rep.mass_ok) rep.notes.push_back("mass differs from 1");
    for (double x : psi.v)
        if (x < -1e-9) rep.nonneg_ok = false;
    if (!rep.nonneg_ok) rep.notes.push_back("negative density values");
    if (psi.cls == DensityClass::MTilde) {
        for (double x : psi.v)
            if (x > 1.0 + 1e-6) rep.density_bound_ok = false;
        if (!rep.density_bound_ok) rep.notes.push_back("density exceeds 1 in class Mt");
    }

    // Theorem A.6 conditions on F(z) = int dpsi/(t-z) = -cauchy_G.
    const double L = psi.b - psi.a, c = 0.5 * (psi.a + psi.b);
    for (double s : {0.4, 0.9, 1.7}) {
        const cplx F = -cauchy_G(psi, cplx(c, s * L));
        if (F.imag() < -1e-9) rep.herglotz_ok = false;
    }
    if (!rep.herglotz_ok) rep.notes.push_back("Im F < 0 at an upper-half-plane probe");
    for (double u : left_probes(psi.a, psi.b))
        if (-cauchy_G(psi, cplx(u, 0.0)).real() <= 0.0) rep.left_positive_ok = false;
    if (!rep.left_positive_ok) rep.notes.push_back("F not positive on (-inf, a)");
    for (double u : right_probes(psi.a, psi.b))
        if (-cauchy_G(psi, cplx(u, 0.0)).real() >= 0.0) rep.right_negative_ok = false;
    if (!rep.right_negative_ok) rep.notes.push_back("F not negative on (b, inf)");
    return rep;
}

MembershipReport membership_checks(const GridDiagram& w) {
    MembershipReport rep;
    const double step = w.h();
    for (size_t i = 0; i + 1 < w.t.size(); ++i)
        if (std::abs(w.v[i + 1] - w.v[i]) > step * (1.0 + 1e-3)) rep.lipschitz_ok = false;
    if (!rep.lipschitz_ok) rep.notes.push_back("Lipschitz-1 violated");
    for (size_t i = 0; i < w.t.size(); ++i)
        if (w.t[i] < w.a - 1e-12 || w.t[i] > w.b + 1e-12)
            if (std::abs(w.v[i] - std::abs(w.t[i] - w.x0)) > 1e-3 * std::max(1.0, std::abs(w.t[i])))
                rep.tail_ok = false;
    if (!rep.tail_ok) rep.notes.push_back("w != |t - x0| outside [a,b]");

    // The class Dt condition R_w > -1, reported separately per side because
    // the two sides appear in different statements.
    for (double u : left_probes(w.a, w.b))
        if (u != 0.0 && !(r_w(w, cplx(u, 0.0)).real() > -1.0)) rep.dtilde_left_ok = false;
    for (double u : right_probes(w.a, w.b))
        if (u != 0.0 && !(r_w(w, cplx(u, 0.0)).real() > -1.0)) rep.dtilde_right_ok = false;
    if (!rep.dtilde_left_ok) rep.notes.push_back("R_w <= -1 at a probe below a");
    if (!rep.dtilde_right_ok) rep.notes.push_back("R_w <= -1 at a probe above b");
    return rep;
}

}  // namespace qmk
