#include "qmk/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmk {

std::string to_string(DensityClass c) { return c == DensityClass::M ? "M" : "Mt"; }
std::string to_string(DiagramClass c) { return c == DiagramClass::D ? "D" : "Dt"; }

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size()) throw std::invalid_argument("trapezoid: size mismatch");
    double s = 0;
    for (size_t i = 0; i + 1 < t.size(); ++i) s += 0.5 * (y[i] + y[i + 1]) * (t[i + 1] - t[i]);
    return s;
}

namespace {
void check_uniform(const std::vector<double>& t) {
    if (t.size() < 2) throw std::invalid_argument("grid needs at least two points");
    const double h = (t.back() - t.front()) / double(t.size() - 1);
    if (h <= 0) throw std::invalid_argument("grid must be increasing");
    for (size_t i = 0; i < t.size(); ++i)
        if (std::abs(t[i] - (t.front() + double(i) * h)) > 1e-9 * std::max(1.0, std::abs(t.back())))
            throw std::invalid_argument("grid must be uniform");
}

double interp(const std::vector<double>& t, const std::vector<double>& v, double x) {
    const double h = (t.back() - t.front()) / double(t.size() - 1);
    double s = (x - t.front()) / h;
    if (s <= 0) return v.front();
    if (s >= double(t.size() - 1)) return v.back();
    size_t j = static_cast<size_t>(s);
    double f = s - double(j);
    return v[j] * (1 - f) + v[j + 1] * f;
}
}  // namespace

double GridDensity::mass() const { return trapezoid(t, v); }

double GridDensity::moment(int k) const {
    std::vector<double> y(t.size());
    for (size_t i = 0; i < t.size(); ++i) y[i] = std::pow(t[i], k) * v[i];
    return trapezoid(t, y);
}

double GridDensity::value_at(double x) const {
    if (x < a || x > b) return 0.0;
    return interp(t, v, x);
}

void GridDensity::validate(double tol) const {
    check_uniform(t);
    if (std::abs(t.front() - a) > 1e-9 || std::abs(t.back() - b) > 1e-9)
        throw std::invalid_argument("GridDensity: grid must span [a,b]");
    if (v.size() != t.size()) throw std::invalid_argument("GridDensity: values/grid size mismatch");
    for (double x : v)
        if (x < -tol) throw std::invalid_argument("GridDensity: negative density value");
    if (std::abs(mass() - 1.0) > tol)
        throw std::invalid_argument("GridDensity: mass differs from 1 beyond tolerance");
    if (cls == DensityClass::MTilde)
        for (double x : v)
            if (x > 1.0 + tol)
                throw std::invalid_argument("GridDensity: density exceeds 1 in class Mt");
}

double GridDiagram::value_at(double x) const {
    if (x < t.front() || x > t.back()) return std::abs(x - x0);
    return interp(t, v, x);
}

void GridDiagram::validate(double tol) const {
    check_uniform(t);
    if (v.size() != t.size()) throw std::invalid_argument("GridDiagram: values/grid size mismatch");
    if (a > b || a < t.front() - 1e-9 || b > t.back() + 1e-9)
        throw std::invalid_argument("GridDiagram: [a,b] must lie inside the grid");
    const double step = h();
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (std::abs(v[i + 1] - v[i]) > step * (1.0 + tol))
            throw std::invalid_argument("GridDiagram: Lipschitz-1 violated");
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] < a - 1e-12 || t[i] > b + 1e-12)
            if (std::abs(v[i] - std::abs(t[i] - x0)) > tol * std::max(1.0, std::abs(t[i])))
                throw std::invalid_argument("GridDiagram: w != |t - x0| outside [a,b]");
}

double p_k_grid(const GridDiagram& w, int k) {
    if (k < 1) throw std::invalid_argument("p_k_grid: k must be >= 1");
    int inside = 0;
    for (double x : w.t) inside += (x >= w.a - 1e-12 && x <= w.b + 1e-12);
    if (inside < 16) throw std::invalid_argument("p_k_grid: grid too coarse (fewer than 16 points in [a,b])");
    double acc = std::pow(w.x0, k);
    if (k >= 2) {
        std::vector<double> integrand(w.t.size(), 0.0);
        for (size_t i = 0; i < w.t.size(); ++i) {
            const double x = w.t[i];
            if (x < w.a || x > w.b) continue;  // w - |t-x0| vanishes outside [a,b]
            integrand[i] = std::pow(x, k - 2) * (w.v[i] - std::abs(x - w.x0));
        }
        acc += 0.5 * double(k) * double(k - 1) * trapezoid(w.t, integrand);
    }
    return acc;
}

GridDensity make_grid_density(double a, double b, int cells,
                              const std::function<double(double)>& f, DensityClass cls) {
    if (cells < 1) throw std::invalid_argument("make_grid_density: need at least one cell");
    GridDensity g;
    g.a = a;
    g.b = b;
    g.cls = cls;
    g.t.resize(cells + 1);
    g.v.resize(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        g.t[i] = a + (b - a) * double(i) / double(cells);
        g.v[i] = f(g.t[i]);
    }
    g.t.front() = a;
    g.t.back() = b;
    return g;
}

GridDiagram make_grid_diagram(double a, double b, double x0, int cells, double margin,
                              const std::function<double(double)>& f, DiagramClass cls) {
    if (cells < 1) throw std::invalid_argument("make_grid_diagram: need at least one cell");
    GridDiagram g;
    g.a = a;
    g.b = b;
    g.x0 = x0;
    g.cls = cls;
    const double lo = a - margin, hi = b + margin;
    g.t.resize(cells + 1);
    g.v.resize(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        g.t[i] = lo + (hi - lo) * double(i) / double(cells);
        g.v[i] = (g.t[i] < a || g.t[i] > b) ? std::abs(g.t[i] - x0) : f(g.t[i]);
    }
    return g;
}

GridDiagram sample_rectangular(const RectangularDiagram& d, int cells, double margin) {
    const double a = rat_to_double(d.x.front());
    const double b = rat_to_double(d.x.back());
    return make_grid_diagram(a, b, rat_to_double(d.z0), cells, margin,
                             [&](double x) { return d.evaluate(x); }, DiagramClass::D);
}

namespace {
// Resample q onto p's grid and apply |p - q| pointwise over [lo, hi].
template <class G>
double sup_diff(const G& p, const G& q, double lo, double hi) {
    double m = 0;
    for (size_t i = 0; i < p.t.size(); ++i) {
        const double x = p.t[i];
        if (x < lo || x > hi) continue;
        m = std::max(m, std::abs(p.v[i] - q.value_at(x)));
    }
    return m;
}
}  // namespace

double l1_distance(const GridDensity& p, const GridDensity& q) {
    const double lo = std::min(p.a, q.a), hi = std::max(p.b, q.b);
    const int cells = 4000;
    std::vector<double> t(cells + 1), y(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        t[i] = lo + (hi - lo) * double(i) / double(cells);
        y[i] = std::abs(p.value_at(t[i]) - q.value_at(t[i]));
    }
    return trapezoid(t, y);
}

double sup_distance_interior(const GridDiagram& p, const GridDiagram& q, double edge_frac) {
    const double band = edge_frac * (p.b - p.a);
    return sup_diff(p, q, p.a + band, p.b - band);
}

double sup_distance_interior(const GridDensity& p, const GridDensity& q, double edge_frac) {
    const double band = edge_frac * (p.b - p.a);
    return sup_diff(p, q, p.a + band, p.b - band);
}

}  // namespace qmk
