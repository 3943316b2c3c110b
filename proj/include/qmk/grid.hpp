#pragma once

#include "qmk/rectangular_diagram.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qmk {

enum class DensityClass { M, MTilde };
enum class DiagramClass { D, DTilde };

std::string to_string(DensityClass c);
std::string to_string(DiagramClass c);

// Density on [a,b] sampled at grid points; integrals use the composite
// trapezoid rule (O(h^2)).
struct GridDensity {
    double a = 0, b = 1;
    std::vector<double> t;  // uniform, t.front()==a, t.back()==b
    std::vector<double> v;  // density values, nonnegative
    DensityClass cls = DensityClass::M;

    double h() const { return t.size() > 1 ? (b - a) / double(t.size() - 1) : 0.0; }
    double mass() const;
    double moment(int k) const;
    double value_at(double x) const;  // linear interpolation, 0 outside [a,b]
    void validate(double tol = 1e-3) const;
};

// Continual Young diagram sampled on a grid covering [a,b] (possibly with
// margin); w(t) = |t - x0| outside [a,b].
struct GridDiagram {
    double a = 0, b = 1;
    double x0 = 0;
    std::vector<double> t;  // uniform
    std::vector<double> v;
    DiagramClass cls = DiagramClass::D;

    double h() const { return t.size() > 1 ? (t.back() - t.front()) / double(t.size() - 1) : 0.0; }
    double value_at(double x) const;  // |x - x0| outside the grid
    void validate(double tol = 1e-3) const;
};

// p_k(w) = (1/2) int t^k w'' dt computed by integrating by parts twice:
// p_k = x0^k + (1/2) k(k-1) int t^{k-2} (w(t) - |t - x0|) dt.
// No numerical second derivative is taken. Rejects grids with fewer than 16
// points inside [a,b].
double p_k_grid(const GridDiagram& w, int k);

GridDensity make_grid_density(double a, double b, int cells,
                              const std::function<double(double)>& f, DensityClass cls);
GridDiagram make_grid_diagram(double a, double b, double x0, int cells, double margin,
                              const std::function<double(double)>& f, DiagramClass cls);

// Sample a rectangular diagram onto a uniform grid with a margin on each side.
GridDiagram sample_rectangular(const RectangularDiagram& d, int cells, double margin = 0.5);

double trapezoid(const std::vector<double>& t, const std::vector<double>& y);

// Comparison helpers shared by tests and the CLI self checks. Interior
// variants skip an edge band of the given fraction of (b-a) on each side.
double l1_distance(const GridDensity& p, const GridDensity& q);
double sup_distance_interior(const GridDiagram& p, const GridDiagram& q, double edge_frac = 0.02);
double sup_distance_interior(const GridDensity& p, const GridDensity& q, double edge_frac = 0.02);

}  // namespace qmk
