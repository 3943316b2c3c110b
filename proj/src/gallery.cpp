#include "qmk/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmk {

namespace {
double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }
}  // namespace

GridDensity plancherel_psi(double gamma, int cells) {
    if (gamma <= 0) throw std::invalid_argument("plancherel_psi: gamma must be positive");
    const double rt = std::sqrt(gamma);
    // For gamma < 1 the bulk formula reaches density 1 at gamma - 2 sqrt(gamma)
    // and the measure continues as a frozen density-1 plateau down to -1;
    // the clamped arccos expression produces exactly that plateau, and the
    // mass and the R-function pairing both require it.
    const double a = gamma >= 1.0 ? gamma - 2.0 * rt : -1.0;
    const double b = gamma + 2.0 * rt;
    auto density = [=](double x) {
        const double xp1 = x + 1.0;
        if (xp1 <= 1e-14) {
            // limit at x = -1: the argument runs to -inf (gamma < 1),
            // 0 (gamma = 1) or +inf (gamma > 1)
            return gamma < 1.0 ? 1.0 : (gamma == 1.0 ? 0.5 : 0.0);
        }
        const double arg = (x + gamma) / (2.0 * std::sqrt(gamma * xp1));
        return std::acos(clamp_unit(arg)) / M_PI;
    };
    GridDensity g = make_grid_density(a, b, cells, density, DensityClass::MTilde);
    // edge values by limits, not raw evaluation
    g.v.back() = 0.0;
    if (gamma > 1.0)
        g.v.front() = 0.0;
    else if (gamma < 1.0)
        g.v.front() = 1.0;
    else
        g.v.front() = 0.5;
    return g;
}

GridDiagram plancherel_w(double gamma, int cells) {
    if (gamma <= 0) throw std::invalid_argument("plancherel_w: gamma must be positive");
    const double rt = std::sqrt(gamma);
    const double a = gamma - 2.0 * rt, b = gamma + 2.0 * rt;
    auto shape = [=](double x) {
        const double s = x - gamma;
        const double under = std::max(4.0 * gamma - s * s, 0.0);
        return (s * std::asin(clamp_unit(s / (2.0 * rt))) + std::sqrt(under)) * 2.0 / M_PI;
    };
    return make_grid_diagram(a, b, gamma, cells, 0.5 * rt, shape, DiagramClass::DTilde);
}

GridDiagram vkls_curve(int cells) {
    auto shape = [](double x) {
        const double under = std::max(4.0 - x * x, 0.0);
        return (x * std::asin(clamp_unit(0.5 * x)) + std::sqrt(under)) * 2.0 / M_PI;
    };
    return make_grid_diagram(-2.0, 2.0, 0.0, cells, 1.0, shape, DiagramClass::D);
}

GridDensity semicircle(int cells) {
    auto density = [](double x) {
        return std::sqrt(std::max(4.0 - x * x, 0.0)) / (2.0 * M_PI);
    };
    return make_grid_density(-2.0, 2.0, cells, density, DensityClass::M);
}

std::pair<GridDensity, GridDiagram> trivial_pair(int cells) {
    GridDensity psi = make_grid_density(0.0, 1.0, cells, [](double) { return 1.0; },
                                        DensityClass::MTilde);
    GridDiagram w = make_grid_diagram(0.0, 1.0, 1.0, cells, 0.5,
                                      [](double x) { return std::abs(x - 1.0); },
                                      DiagramClass::DTilde);
    return {std::move(psi), std::move(w)};
}

}  // namespace qmk
