#pragma once

#include "qmk/rational.hpp"
#include "qmk/signature.hpp"

#include <map>
#include <vector>

namespace qmk {

// Sparse multivariate polynomial over the rationals, exponent vectors of
// fixed length. Small N only; this is the symbolic workhorse behind the
// tensor decomposition and the operator checks.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;

    static MultiPoly zero(int n) { return MultiPoly{n, {}}; }
    static MultiPoly constant(int n, const Rat& c);
    static MultiPoly monomial(std::vector<int> e, const Rat& c);

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;

    // substitute x_i = 1 (exponent of variable i dropped to 0, terms merged)
    MultiPoly subst_one(int var) const;

    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

// prod_{i<j} (x_i - x_j)
MultiPoly vandermonde_poly(int nvars);

// Exact division by (x_i - x_j); throws if a remainder is left.
MultiPoly divide_by_binomial(const MultiPoly& p, int i, int j);

// Schur polynomial by Gelfand-Tsetlin branching; lambda must have
// nonnegative parts. Embedded into `nvars` variables (trailing exponents 0)
// when nvars exceeds lambda.n().
MultiPoly schur_poly(const Signature& lambda, int nvars);

// D_{N,k} f = V^{-1} (sum_i (x_i d_i)^k) (V f), evaluated exactly.
// On the Vandermonde side the operator acts monomial by monomial, so only
// the final division can fail (and never does for symmetric f).
MultiPoly apply_power_sum_operator(int k, const MultiPoly& f);

// Checks sum_mu P(mu|lambda) s_mu(x)/s_mu(1^{N-1}) = s_lambda(x,1)/s_lambda(1^N)
// as polynomials in x_1..x_{N-1}.
bool verify_projection_sgf(const Signature& lambda);

}  // namespace qmk
