#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned k) {
    Int r = 1;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

// x^k for integer k of either sign; x must be nonzero when k < 0.
inline Rat rat_pow(const Rat& x, long k) {
    if (k == 0) return Rat(1);
    if (k < 0) {
        if (x == 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
        Rat inv = Rat(denominator(x), numerator(x));
        return rat_pow(inv, -k);
    }
    Rat r = 1, b = x;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline double rat_to_double(const Rat& x) { return x.convert_to<double>(); }

// Serialized as "p" or "p/q" with q > 0.
inline std::string rat_to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: \"" + s + "\"");
    }
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

namespace detail {
// Prefix power sums F_j(q) = sum_{m=0}^{q} m^j for q >= 0, all j = 0..jmax at once.
// Pascal recurrence: (q+1)^{j+1} = sum_{i=0}^{j} C(j+1,i) F_i(q).
inline std::vector<Int> power_sum_prefix(const Int& q, int jmax) {
    std::vector<Int> F(jmax + 1);
    Int qp = q + 1;          // (q+1)^{j+1}, built incrementally
    Int pw = qp;
    for (int j = 0; j <= jmax; ++j) {
        Int s = pw;
        for (int i = 0; i < j; ++i) s -= binomial(j + 1, i) * F[i];
        F[j] = s / (j + 1);  // exact
        pw *= qp;
    }
    return F;
}

// F_j(q) extended to q <= -1 so that F_j(q) - F_j(p-1) = sum_{m=p}^{q} m^j
// holds for any integers p <= q.
inline Int power_sum_prefix_signed(const Int& q, int j) {
    if (q >= 0) return power_sum_prefix(q, j)[j];
    // sum_{m=0}^{q} := -sum_{m=q+1}^{-1} m^j = -(-1)^j sum_{m=1}^{-q-1} m^j
    Int body = power_sum_prefix(-q - 1, j)[j] - (j == 0 ? 1 : 0);
    return (j % 2 == 0) ? -body : body;
}
}  // namespace detail

// sum_{m=p}^{q} m^j via Faulhaber-type evaluation, exact, O(j^2) independent of q-p.
inline Int interval_power_sum(const Int& p, const Int& q, int j) {
    if (p > q) return 0;
    return detail::power_sum_prefix_signed(q, j) - detail::power_sum_prefix_signed(p - 1, j);
}

}  // namespace qmk
