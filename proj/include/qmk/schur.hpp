#pragma once

#include "qmk/rational.hpp"
#include "qmk/signature.hpp"

#include <vector>

namespace qmk {

// dim V^lambda_N = s_lambda(1^N) by the Weyl product formula
// prod_{i<j} (shifted_i - shifted_j)/(j - i); exact.
Int weyl_dimension(const Signature& lambda);

// All signatures of length N-1 interlacing lambda, enumerated exactly.
// Throws when prod(lambda_i - lambda_{i+1} + 1) exceeds the cap.
std::vector<Signature> enumerate_interlacing(const Signature& lambda, long long cap = 1000000);

// s_lambda(points): determinant ratio at pairwise distinct points, exact
// Gelfand-Tsetlin summation otherwise. Points must be nonzero when lambda has
// negative parts (Laurent case).
Rat schur_eval(const Signature& lambda, const std::vector<Rat>& points);

}  // namespace qmk
