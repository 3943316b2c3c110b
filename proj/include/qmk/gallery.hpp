#pragma once

#include "qmk/grid.hpp"

namespace qmk {

// Closed-form reference objects paired by the correspondences. Default grids
// are fine enough for 1e-5 probe agreement of the R-functions.

// One-sided Plancherel character density with parameter gamma on
// [gamma - 2 sqrt(gamma), gamma + 2 sqrt(gamma)]; class Mt.
GridDensity plancherel_psi(double gamma, int cells = 8000);

// The paired diagram (a shifted/scaled VKLS curve) on the same interval,
// with the outside-support corner at x0 = gamma.
GridDiagram plancherel_w(double gamma, int cells = 8000);

// Vershik-Kerov-Logan-Shepp limit shape on [-2,2].
GridDiagram vkls_curve(int cells = 8000);

// Semicircle density on [-2,2].
GridDensity semicircle(int cells = 8000);

// Uniform density on [0,1] paired with |x - 1|.
std::pair<GridDensity, GridDiagram> trivial_pair(int cells = 8000);

}  // namespace qmk
