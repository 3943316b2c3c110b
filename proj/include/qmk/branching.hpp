#pragma once

#include "qmk/rational.hpp"
#include "qmk/schur.hpp"
#include "qmk/signature.hpp"

#include <vector>

namespace qmk {

// Restriction of V^lambda_N to U(N-1): multiplicity-free support on the
// interlacing mu with P(mu | lambda) = dim(mu)/dim(lambda).
struct BranchingLaw {
    Signature parent;
    std::vector<std::pair<Signature, Rat>> support;

    Rat probability_of(const Signature& mu) const;
};

BranchingLaw branching_law(const Signature& lambda, long long enumeration_cap = 1000000);

}  // namespace qmk
