#include "qmk/signature_law.hpp"

#include "qmk/branching.hpp"
#include "qmk/multipoly.hpp"
#include "qmk/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmk {

SignatureLaw SignatureLaw::dirac(const Signature& lambda) {
    SignatureLaw law;
    law.n = lambda.n();
    law.support.emplace_back(lambda, Rat(1));
    return law;
}

void SignatureLaw::validate() const {
    Rat total = 0;
    for (const auto& [sig, p] : support) {
        if (sig.n() != n) throw std::invalid_argument("SignatureLaw: level mismatch");
        if (p <= 0) throw std::invalid_argument("SignatureLaw: nonpositive probability");
        total += p;
    }
    if (total != 1) throw std::invalid_argument("SignatureLaw: probabilities must sum to 1");
}

SignatureLaw tensor_product_law(const std::vector<Signature>& lambdas, long long dimension_cap) {
    if (lambdas.empty()) throw std::invalid_argument("tensor_product_law: empty factor list");
    const int N = lambdas[0].n();
    for (const auto& l : lambdas)
        if (l.n() != N) throw std::invalid_argument("tensor_product_law: factors at different levels");

    Int dim_product = 1;
    for (const auto& l : lambdas) dim_product *= weyl_dimension(l);
    if (dim_product > dimension_cap)
        throw std::runtime_error("tensor_product_law: dimension cap exceeded (" +
                                 dim_product.str() + ")");

    // Shift each factor to nonnegative parts; undo the total shift on output.
    long long total_shift = 0;
    MultiPoly product = MultiPoly::constant(N, 1);
    for (const auto& l : lambdas) {
        const long long shift = std::min<long long>(l.parts.back(), 0);
        total_shift += shift;
        std::vector<long long> parts(l.parts);
        for (auto& p : parts) p -= shift;
        product = product * schur_poly(Signature(parts), N);
    }

    // Repeated leading-term reduction: the lex-greatest exponent of a
    // symmetric polynomial is non-increasing and is the leading monomial of
    // the corresponding Schur polynomial, with coefficient 1.
    SignatureLaw law;
    law.n = N;
    Rat total = 0;
    std::vector<std::pair<Signature, Rat>> multiplicities;
    while (!product.is_zero()) {
        auto lead = std::prev(product.terms.end());
        std::vector<int> e = lead->first;
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i - 1] < e[i])
                throw std::logic_error("tensor_product_law: non-dominant leading monomial");
        Rat mult = lead->second;
        std::vector<long long> parts(e.begin(), e.end());
        Signature kappa(parts);
        product = product - schur_poly(kappa, N) * mult;
        multiplicities.emplace_back(kappa, mult);
    }
    for (auto& [kappa, mult] : multiplicities) {
        std::vector<long long> parts(kappa.parts);
        for (auto& p : parts) p += total_shift;
        Signature shifted_back(parts);
        Rat prob = mult * Rat(weyl_dimension(shifted_back), dim_product);
        law.support.emplace_back(shifted_back, prob);
        total += prob;
    }
    if (total != 1) throw std::logic_error("tensor_product_law: total mass is not 1");
    std::sort(law.support.begin(), law.support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return law;
}

namespace {
Rat m_integral(const Signature& lambda, int k) {
    const long long N = lambda.n();
    Rat s = 0;
    for (long long sh : lambda.shifted()) s += Rat(int_pow(Int(sh), k));
    return s / rat_pow(Rat(N), k + 1);
}

Rat d_integral(const Signature& lambda, const Signature& mu, int k) {
    const long long N = lambda.n();
    Rat s = 0;
    for (long long sh : lambda.shifted()) s += Rat(int_pow(Int(sh), k));
    for (long long sh : mu.shifted()) s -= Rat(int_pow(Int(sh), k));
    return s / rat_pow(Rat(N), k);
}
}  // namespace

Rat finite_m_moment(const SignatureLaw& law, int k) {
    if (k < 0) throw std::invalid_argument("finite_m_moment: k must be >= 0");
    Rat acc = 0;
    for (const auto& [lambda, p] : law.support) acc += p * m_integral(lambda, k);
    return acc;
}

Rat finite_d_moment(const SignatureLaw& law, int k, long long enumeration_cap) {
    if (k < 0) throw std::invalid_argument("finite_d_moment: k must be >= 0");
    Rat acc = 0;
    for (const auto& [lambda, p] : law.support) {
        auto branching = branching_law(lambda, enumeration_cap);
        for (const auto& [mu, q] : branching.support) acc += p * q * d_integral(lambda, mu, k);
    }
    return acc;
}

}  // namespace qmk
