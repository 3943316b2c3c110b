#pragma once

#include "qmk/rational.hpp"
#include "qmk/signature.hpp"

#include <vector>

namespace qmk {

// Exactly enumerated probability measure on signatures of one level.
struct SignatureLaw {
    int n = 0;
    std::vector<std::pair<Signature, Rat>> support;

    static SignatureLaw dirac(const Signature& lambda);
    void validate() const;  // positive probabilities summing to 1
};

// Decomposition measure rho[V^{lambda(1)} x ... x V^{lambda(r)}] by exact
// Schur-polynomial multiplication and leading-term reduction.
SignatureLaw tensor_product_law(const std::vector<Signature>& lambdas,
                                long long dimension_cap = 1000000);

// E[int x^k m[lambda]] and E[int x^k d[lambda, pi lambda]] over the law,
// exact; the d-moment enumerates branching laws and inherits their cap.
Rat finite_m_moment(const SignatureLaw& law, int k);
Rat finite_d_moment(const SignatureLaw& law, int k, long long enumeration_cap = 1000000);

}  // namespace qmk
