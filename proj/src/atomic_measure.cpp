#include "qmk/atomic_measure.hpp"

#include <algorithm>

namespace qmk {

namespace {
// Sort by location, merge equal locations, optionally drop zero weights.
std::vector<std::pair<Rat, Rat>> canonicalize(std::vector<std::pair<Rat, Rat>> a, bool drop_zero) {
    std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Rat, Rat>> out;
    for (auto& at : a) {
        if (!out.empty() && out.back().first == at.first)
            out.back().second += at.second;
        else
            out.push_back(at);
    }
    if (drop_zero)
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& at) { return at.second == 0; }),
                  out.end());
    return out;
}

Rat moment_of(const std::vector<std::pair<Rat, Rat>>& atoms, int k) {
    if (k < 0) throw std::invalid_argument("moment: k must be nonnegative");
    Rat s = 0;
    for (const auto& [loc, w] : atoms) s += w * rat_pow(loc, k);
    return s;
}
}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<std::pair<Rat, Rat>> a, bool probability) {
    for (const auto& [loc, w] : a) {
        (void)loc;
        if (w < 0) throw std::invalid_argument("AtomicMeasure: negative weight");
    }
    atoms = canonicalize(std::move(a), /*drop_zero=*/true);
    if (probability && total_weight() != 1)
        throw std::invalid_argument("AtomicMeasure: flagged probability measure has mass != 1");
}

Rat AtomicMeasure::total_weight() const {
    Rat s = 0;
    for (const auto& at : atoms) s += at.second;
    return s;
}

SignedAtomicMeasure::SignedAtomicMeasure(std::vector<std::pair<Rat, Rat>> a) {
    atoms = canonicalize(std::move(a), /*drop_zero=*/true);
}

Rat SignedAtomicMeasure::total_weight() const {
    Rat s = 0;
    for (const auto& at : atoms) s += at.second;
    return s;
}

AtomicMeasure counting_measure(const Signature& lambda) {
    const long long N = lambda.n();
    std::vector<std::pair<Rat, Rat>> a;
    a.reserve(lambda.parts.size());
    const Rat w(1, N);
    for (long long sh : lambda.shifted()) a.emplace_back(Rat(sh, N), w);
    return AtomicMeasure(std::move(a), /*probability=*/true);
}

SignedAtomicMeasure difference_measure(const InterlacingPair& pair) {
    const long long N = pair.upper.n();
    std::vector<std::pair<Rat, Rat>> a;
    for (long long sh : pair.upper.shifted()) a.emplace_back(Rat(sh, N), Rat(1));
    for (long long sh : pair.lower.shifted()) a.emplace_back(Rat(sh, N), Rat(-1));
    SignedAtomicMeasure d(std::move(a));
    return d;
}

Rat moment(const AtomicMeasure& m, int k) { return moment_of(m.atoms, k); }
Rat moment(const SignedAtomicMeasure& m, int k) { return moment_of(m.atoms, k); }

}  // namespace qmk
