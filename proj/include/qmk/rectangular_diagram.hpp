#pragma once

#include "qmk/rational.hpp"

#include <vector>

namespace qmk {

// Piecewise-linear continual Young diagram built from interlacing sequences
// x_1 < ... < x_N and y_i in [x_i, x_{i+1}]: slope +1 on (x_i, y_i), -1 on
// (y_i, x_{i+1}), and w(t) = |t - z0| outside [x_1, x_N] with
// z0 = sum x_i - sum y_i.
struct RectangularDiagram {
    std::vector<Rat> x;  // N corners going up, strictly increasing
    std::vector<Rat> y;  // N-1 corners going down
    Rat z0;

    Rat evaluate(const Rat& t) const;
    double evaluate(double t) const;
};

RectangularDiagram build_rectangular_diagram(std::vector<Rat> x, std::vector<Rat> y);

// p_k(w) = (1/2) int t^k w''(t) dt on the atomic second derivative:
// w'' = 2 sum delta(x_i) - 2 sum delta(y_i), so p_k = sum x_i^k - sum y_i^k.
Rat p_k_rectangular(const RectangularDiagram& d, int k);

}  // namespace qmk
