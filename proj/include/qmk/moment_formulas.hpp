#pragma once

#include "qmk/profile.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qmk {

// Limiting moments of the counting measure and of the consecutive-level
// difference measure, as functions of the profile H'. Derivative evaluations
// at z = 1 are read off series coefficients in t = z - 1:
//   (d/dz)^l (z^k H'(z)^{k-l}) |_{z=1} = l! * [t^l] ((1+t)^k Hp(t)^{k-l}).

namespace detail {
inline bool coeff_equal(const Rat& a, const Rat& b) { return a == b; }
inline bool coeff_equal(double a, double b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= 1e-12 * scale;
}

template <class K>
std::vector<TruncatedSeries<K>> hprime_powers(const AsymptoticProfile<K>& profile, int kmax) {
    auto hp = profile.hprime(kmax);
    std::vector<TruncatedSeries<K>> pw;
    pw.push_back(TruncatedSeries<K>::constant(K(1), kmax, 1));
    for (int e = 1; e <= kmax; ++e) pw.push_back(pw.back() * hp);
    return pw;
}

template <class K>
TruncatedSeries<K> one_plus_t_pow(int k, int order) {
    std::vector<K> v(order + 1, K(0));
    for (int j = 0; j <= order; ++j) v[j] = K(binomial(k, j).template convert_to<long long>());
    return TruncatedSeries<K>(1, std::move(v));
}
}  // namespace detail

// m_k = sum_{l=0}^{k} C(k,l)/(l+1) [t^l]((1+t)^k Hp^{k-l}); returns m_0..m_kmax.
template <class K>
std::vector<K> m_moments(const AsymptoticProfile<K>& profile, int kmax) {
    if (kmax < 0) throw std::invalid_argument("m_moments: kmax must be >= 0");
    auto pw = detail::hprime_powers(profile, kmax);
    std::vector<K> m(kmax + 1);
    m[0] = K(1);
    for (int k = 1; k <= kmax; ++k) {
        auto zk = detail::one_plus_t_pow<K>(k, kmax);
        K acc(0);
        for (int l = 0; l <= k; ++l) {
            K binom = K(binomial(k, l).template convert_to<long long>());
            acc += binom / K(l + 1) * (zk * pw[k - l]).coeff(l);
        }
        m[k] = acc;
    }
    return m;
}

// d_k = sum_{l=0}^{k} C(k,l) [t^l]((1+t)^k Hp^{k-l}); returns d_1..d_kmax.
template <class K>
std::vector<K> d_moments(const AsymptoticProfile<K>& profile, int kmax) {
    if (kmax < 1) throw std::invalid_argument("d_moments: kmax must be >= 1");
    auto pw = detail::hprime_powers(profile, kmax);
    std::vector<K> d(kmax);
    for (int k = 1; k <= kmax; ++k) {
        auto zk = detail::one_plus_t_pow<K>(k, kmax);
        K acc(0);
        for (int l = 0; l <= k; ++l) {
            K binom = K(binomial(k, l).template convert_to<long long>());
            acc += binom * (zk * pw[k - l]).coeff(l);
        }
        d[k - 1] = acc;
    }
    return d;
}

namespace detail {
// w H'(w) + w/(w-1) = t^{-1} (1+t)(t Hp(t) + 1) as a Laurent series in t = w-1.
template <class K>
LaurentSeries<K> moment_kernel(const AsymptoticProfile<K>& profile, int order) {
    auto hp = profile.hprime(order);
    auto t = TruncatedSeries<K>::var(order, 1);
    auto one = TruncatedSeries<K>::constant(K(1), order, 1);
    auto bracket = (one + t) * (t * hp + one);
    return LaurentSeries<K>{-1, bracket};
}
}  // namespace detail

// Residue at w=1 of (1/(k+1)) (1/w) (wH'(w) + w/(w-1))^{k+1}, extracted from
// the exact Laurent expansion in (w-1); pole order k+1, no contour is traced.
template <class K>
K m_moment_contour(const AsymptoticProfile<K>& profile, int k) {
    if (k < 0) throw std::invalid_argument("m_moment_contour: k must be >= 0");
    const int order = k + 1;
    auto kernel = detail::moment_kernel(profile, order);
    auto t = TruncatedSeries<K>::var(order, 1);
    auto one = TruncatedSeries<K>::constant(K(1), order, 1);
    LaurentSeries<K> inv_w{0, reciprocal(one + t)};
    auto integrand = inv_w * pow_laurent(kernel, k + 1);
    return integrand.residue() / K(k + 1);
}

// Residue at w=1 of (1/(w-1)) (wH'(w) + w/(w-1))^k.
template <class K>
K d_moment_contour(const AsymptoticProfile<K>& profile, int k) {
    if (k < 1) throw std::invalid_argument("d_moment_contour: k must be >= 1");
    const int order = k + 1;
    auto kernel = detail::moment_kernel(profile, order);
    LaurentSeries<K> inv_t{-1, TruncatedSeries<K>::constant(K(1), order, 1)};
    auto integrand = inv_t * pow_laurent(kernel, k);
    return integrand.residue();
}

// y(w) = 1/(wH'(w) + w/(w-1)) is locally invertible at w=1 with inverse
// w = exp(y F(y)); checks the identity through the given order.
template <class K>
bool lagrange_check(const AsymptoticProfile<K>& profile, int order) {
    if (order < 1) throw std::invalid_argument("lagrange_check: order must be >= 1");
    auto kernel = detail::moment_kernel(profile, order + 1);
    // y = t / B(t), a power series with unit linear coefficient.
    auto t = TruncatedSeries<K>::var(order + 1, 1);
    auto y = t * reciprocal(kernel.reg);
    auto tau = revert(y);  // w - 1 as a series in y

    auto m = m_moments(profile, order + 1);
    std::vector<K> fc(order + 2, K(0));
    for (int j = 0; j + 1 <= order + 1; ++j) fc[j + 1] = m[j];  // y F(y)
    TruncatedSeries<K> yF(1, std::move(fc));
    auto rhs = exp_series(yF);  // exp(y F(y)) as series in y

    for (int j = 0; j <= order; ++j) {
        const K w_coeff = (j == 0) ? K(1) : tau.coeff(j);  // w = 1 + tau(y)
        if (!detail::coeff_equal(w_coeff, rhs.coeff(j))) return false;
    }
    return true;
}

}  // namespace qmk
