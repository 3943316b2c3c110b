#pragma once

#include "qmk/grid.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace qmk {

using cplx = std::complex<double>;

// Fixed 12-point probe set off [a,b]: three real probes on each side plus
// six complex probes (one in the lower half-plane for Schwarz symmetry).
std::vector<cplx> standard_probe_set(double a, double b);
std::vector<double> left_probes(double a, double b);   // u < a
std::vector<double> right_probes(double a, double b);  // u > b

// --- Cauchy transforms and R-functions (public sign convention:
//     integrals are taken against 1/(u - t)) --------------------------------

// int psi(t)/(u-t) dt; the piecewise-linear interpolant of the grid density
// is integrated against the exact kernel cell by cell, so probes arbitrarily
// close to [a,b] stay accurate. Rejects real u inside [a,b].
cplx cauchy_G(const GridDensity& psi, cplx u);

cplx r_psi(const GridDensity& psi, cplx u);  // -1 + exp(cauchy_G)
cplx r_mu(const GridDensity& mu, cplx u);    // cauchy_G

// (1/u) exp int dsigma(t)/(t-u) with sigma = (w - |x|)/2; the sigma-slope is
// taken per grid cell inside [a,b] and in closed form on the segments
// between 0 and [a,b] where w = |x - x0| identically. Real probes between 0
// and [a,b] use the principal-value continuation. Rejects u = 0 and real u
// in [a,b].
cplx r_w(const GridDiagram& w, cplx u);

// --- Stieltjes inversion ----------------------------------------------------

struct InversionResult {
    bool degenerate = false;
    GridDensity density;  // valid when !degenerate; mass renormalized to 1
    std::vector<std::pair<double, double>> atoms;  // (location, mass) summary
    std::string note;
};

// Recover a density on [a,b] from boundary values of F(u) = int d mu/(u-t):
// density = -(1/pi) Im F(t + i eta) at eta in {4h, 2h, h} with Richardson
// extrapolation in eta. Point masses are detected by mass-concentration
// diagnostics and reported as atoms instead of a density grid.
InversionResult stieltjes_invert(const std::function<cplx(cplx)>& F, double a, double b,
                                 int cells = 2000, DensityClass cls = DensityClass::M);

// --- the bijections ---------------------------------------------------------

// psi in Mt[a,b] -> mu in M[a,b] with R_mu = R_psi (may be a point mass).
InversionResult quantize(const GridDensity& psi, int cells = 2000);

// mu in M[a,b] with R_mu > -1 on (-inf,a) -> psi in Mt[a,b] with R_psi = R_mu.
GridDensity dequantize(const GridDensity& mu, int cells = 2000);

// Kerov correspondence in both directions: R_mu = R_w.
GridDiagram mk_mu_to_w(const GridDensity& mu, int cells = 2000);
GridDensity mk_w_to_mu(const GridDiagram& w, int cells = 2000);

// Quantized correspondence: R_psi = R_w.
GridDiagram qmk_psi_to_w(const GridDensity& psi, int cells = 2000);
GridDensity qmk_w_to_psi(const GridDiagram& w, int cells = 2000);

// --- membership diagnostics -------------------------------------------------

struct MembershipReport {
    // densities
    bool mass_ok = true;
    bool nonneg_ok = true;
    bool density_bound_ok = true;  // psi <= 1, class Mt only
    bool herglotz_ok = true;       // Im F >= 0 at upper-half-plane probes
    bool left_positive_ok = true;  // F > 0 on (-inf, a)
    bool right_negative_ok = true; // F < 0 on (b, inf)
    // diagrams
    bool lipschitz_ok = true;
    bool tail_ok = true;           // w = |t - x0| outside [a,b]
    bool dtilde_left_ok = true;    // R_w > -1 at probes u < a
    bool dtilde_right_ok = true;   // R_w > -1 at probes u > b
    double mass = 0;
    std::vector<std::string> notes;

    bool all_ok() const {
        return mass_ok && nonneg_ok && density_bound_ok && herglotz_ok && left_positive_ok &&
               right_negative_ok && lipschitz_ok && tail_ok && dtilde_left_ok && dtilde_right_ok;
    }
};

MembershipReport membership_checks(const GridDensity& psi);
MembershipReport membership_checks(const GridDiagram& w);

// --- semiclassical rescaling -------------------------------------------------

// mu_hat(t) = psi(t/eps)/eps on [eps a, eps b]; w_hat(t) = eps w(t/eps).
std::pair<GridDensity, GridDiagram> semiclassical_rescale(const GridDensity& psi,
                                                          const GridDiagram& w, double epsilon);

}  // namespace qmk
