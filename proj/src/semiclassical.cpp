#include "qmk/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace qmk {

std::pair<GridDensity, GridDiagram> semiclassical_rescale(const GridDensity& psi,
                                                          const GridDiagram& w, double epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("semiclassical_rescale: epsilon must be positive");
    const double tol = 1e-6 * std::max(1.0, std::abs(psi.b));
    if (std::abs(psi.a - w.a) > tol || std::abs(psi.b - w.b) > tol)
        throw std::invalid_argument("semiclassical_rescale: density/diagram support mismatch");

    GridDensity mu_hat;
    mu_hat.a = epsilon * psi.a;
    mu_hat.b = epsilon * psi.b;
    mu_hat.cls = DensityClass::M;
    mu_hat.t.resize(psi.t.size());
    mu_hat.v.resize(psi.v.size());
    for (size_t i = 0; i < psi.t.size(); ++i) {
        mu_hat.t[i] = epsilon * psi.t[i];
        mu_hat.v[i] = psi.v[i] / epsilon;  // d mu_hat(t) = d psi(t/eps)
    }

    GridDiagram w_hat;
    w_hat.a = epsilon * w.a;
    w_hat.b = epsilon * w.b;
    w_hat.x0 = epsilon * w.x0;
    w_hat.cls = w.cls;
    w_hat.t.resize(w.t.size());
    w_hat.v.resize(w.v.size());
    for (size_t i = 0; i < w.t.size(); ++i) {
        w_hat.t[i] = epsilon * w.t[i];
        w_hat.v[i] = epsilon * w.v[i];  // keeps Lipschitz-1 and p_k scaling
    }
    return {std::move(mu_hat), std::move(w_hat)};
}

}  // namespace qmk
