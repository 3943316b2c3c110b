#include "qmk/rectangular_diagram.hpp"

#include <stdexcept>

namespace qmk {

RectangularDiagram build_rectangular_diagram(std::vector<Rat> x, std::vector<Rat> y) {
    if (x.empty()) throw std::invalid_argument("rectangular diagram needs at least one x corner");
    if (y.size() + 1 != x.size())
        throw std::invalid_argument("rectangular diagram needs exactly N-1 y corners");
    for (size_t i = 1; i < x.size(); ++i)
        if (!(x[i - 1] < x[i]))
            throw std::invalid_argument("x corners must be strictly increasing");
    for (size_t i = 0; i < y.size(); ++i)
        if (!(x[i] <= y[i] && y[i] <= x[i + 1]))
            throw std::invalid_argument("y corners must interlace the x corners");
    Rat z0 = 0;
    for (const Rat& v : x) z0 += v;
    for (const Rat& v : y) z0 -= v;
    return RectangularDiagram{std::move(x), std::move(y), std::move(z0)};
}

Rat RectangularDiagram::evaluate(const Rat& t) const {
    if (t <= x.front() || t >= x.back()) return t >= z0 ? t - z0 : z0 - t;
    // Walk the corner list accumulating slopes from the left edge.
    Rat val = z0 - x.front();
    Rat pos = x.front();
    for (size_t i = 0; i + 1 < x.size(); ++i) {
        if (t <= y[i]) return val + (t - pos);
        val += y[i] - pos;
        pos = y[i];
        if (t <= x[i + 1]) return val - (t - pos);
        val -= x[i + 1] - pos;
        pos = x[i + 1];
    }
    return val;  // t == x.back()
}

double RectangularDiagram::evaluate(double t) const {
    // Rational evaluation at a nearby rational point keeps the kink logic in
    // one place; double accuracy is all callers need here.
    return rat_to_double(evaluate(Rat(t)));
}

Rat p_k_rectangular(const RectangularDiagram& d, int k) {
    if (k < 1) throw std::invalid_argument("p_k: k must be >= 1");
    Rat s = 0;
    for (const Rat& v : d.x) s += rat_pow(v, k);
    for (const Rat& v : d.y) s -= rat_pow(v, k);
    return s;
}

}  // namespace qmk
