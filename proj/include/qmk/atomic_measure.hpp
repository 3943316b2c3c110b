#pragma once

#include "qmk/rational.hpp"
#include "qmk/signature.hpp"

#include <utility>
#include <vector>

namespace qmk {

// Finite atomic measure with exact rational locations and weights.
// Canonical form: locations strictly increasing, equal locations merged,
// zero weights dropped (for the signed variant).
struct AtomicMeasure {
    std::vector<std::pair<Rat, Rat>> atoms;  // (location, weight >= 0)

    AtomicMeasure() = default;
    explicit AtomicMeasure(std::vector<std::pair<Rat, Rat>> a, bool probability = false);

    Rat total_weight() const;
    bool is_probability() const { return total_weight() == 1; }
};

struct SignedAtomicMeasure {
    std::vector<std::pair<Rat, Rat>> atoms;  // (location, weight, any sign)

    SignedAtomicMeasure() = default;
    explicit SignedAtomicMeasure(std::vector<std::pair<Rat, Rat>> a);

    Rat total_weight() const;
};

// m[lambda]: atom at (lambda_i + N - i)/N with weight 1/N for each i.
AtomicMeasure counting_measure(const Signature& lambda);

// d[lambda,mu]: +1 atoms at (lambda_i+N-i)/N minus +1 atoms at (mu_i+N-1-i)/N,
// canonicalized; total weight is exactly 1.
SignedAtomicMeasure difference_measure(const InterlacingPair& pair);

Rat moment(const AtomicMeasure& m, int k);
Rat moment(const SignedAtomicMeasure& m, int k);

}  // namespace qmk
