#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qmk {

// Dense truncated power series around a stated center (0 or 1). Coefficient
// type K is exact rational or double; every identity that holds for formal
// series holds coefficientwise through the truncation order.
//
// Binary operations require matching centers; recentering is always explicit
// at call sites (the center only matters for bookkeeping, arithmetic is in
// the local variable t = x - center).
template <class K>
struct TruncatedSeries {
    int center = 0;  // 0 or 1
    std::vector<K> c;

    TruncatedSeries() = default;
    TruncatedSeries(int ctr, std::vector<K> coeffs) : center(ctr), c(std::move(coeffs)) {
        if (c.empty()) throw std::invalid_argument("series needs at least the constant term");
    }

    static TruncatedSeries constant(const K& value, int order, int ctr = 0) {
        std::vector<K> v(order + 1, K(0));
        v[0] = value;
        return TruncatedSeries(ctr, std::move(v));
    }
    // t = x - center
    static TruncatedSeries var(int order, int ctr = 0) {
        std::vector<K> v(order + 1, K(0));
        if (order >= 1) v[1] = K(1);
        return TruncatedSeries(ctr, std::move(v));
    }

    int order() const { return static_cast<int>(c.size()) - 1; }
    K coeff(int j) const { return (j >= 0 && j <= order()) ? c[j] : K(0); }

    TruncatedSeries truncated(int new_order) const {
        std::vector<K> v(new_order + 1, K(0));
        for (int j = 0; j <= new_order && j <= order(); ++j) v[j] = c[j];
        return TruncatedSeries(center, std::move(v));
    }

    void check_center(const TruncatedSeries& o) const {
        if (center != o.center) throw std::invalid_argument("series center mismatch");
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_center(b);
        int ord = std::min(a.order(), b.order());
        std::vector<K> v(ord + 1);
        for (int j = 0; j <= ord; ++j) v[j] = a.coeff(j) + b.coeff(j);
        return TruncatedSeries(a.center, std::move(v));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_center(b);
        int ord = std::min(a.order(), b.order());
        std::vector<K> v(ord + 1);
        for (int j = 0; j <= ord; ++j) v[j] = a.coeff(j) - b.coeff(j);
        return TruncatedSeries(a.center, std::move(v));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_center(b);
        int ord = std::min(a.order(), b.order());
        std::vector<K> v(ord + 1, K(0));
        for (int i = 0; i <= ord; ++i)
            for (int j = 0; i + j <= ord; ++j) v[i + j] += a.coeff(i) * b.coeff(j);
        return TruncatedSeries(a.center, std::move(v));
    }
    friend TruncatedSeries operator*(const K& s, const TruncatedSeries& a) {
        std::vector<K> v(a.c);
        for (K& x : v) x = s * x;
        return TruncatedSeries(a.center, std::move(v));
    }

    bool operator==(const TruncatedSeries& o) const { return center == o.center && c == o.c; }
};

template <class K>
TruncatedSeries<K> derivative(const TruncatedSeries<K>& a) {
    std::vector<K> v(std::max(1, a.order()), K(0));
    for (int j = 1; j <= a.order(); ++j) v[j - 1] = K(j) * a.c[j];
    return TruncatedSeries<K>(a.center, std::move(v));
}

// Multiplicative inverse; constant term must be a unit.
template <class K>
TruncatedSeries<K> reciprocal(const TruncatedSeries<K>& a) {
    if (a.c[0] == K(0)) throw std::invalid_argument("reciprocal: constant term is zero");
    std::vector<K> r(a.order() + 1, K(0));
    r[0] = K(1) / a.c[0];
    for (int n = 1; n <= a.order(); ++n) {
        K s(0);
        for (int j = 1; j <= n; ++j) s += a.coeff(j) * r[n - j];
        r[n] = -s / a.c[0];
    }
    return TruncatedSeries<K>(a.center, std::move(r));
}

template <class K>
TruncatedSeries<K> operator/(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
    return a * reciprocal(b);
}

// exp of a series with zero constant term: b' = a' b.
template <class K>
TruncatedSeries<K> exp_series(const TruncatedSeries<K>& a) {
    if (a.c[0] != K(0)) throw std::invalid_argument("exp_series: constant term must vanish");
    std::vector<K> b(a.order() + 1, K(0));
    b[0] = K(1);
    for (int n = 1; n <= a.order(); ++n) {
        K s(0);
        for (int j = 1; j <= n; ++j) s += K(j) * a.coeff(j) * b[n - j];
        b[n] = s / K(n);
    }
    return TruncatedSeries<K>(a.center, std::move(b));
}

// log of a series with unit constant term: l' = a'/a.
template <class K>
TruncatedSeries<K> log_series(const TruncatedSeries<K>& a) {
    if (a.c[0] != K(1)) throw std::invalid_argument("log_series: constant term must be 1");
    std::vector<K> l(a.order() + 1, K(0));
    for (int n = 1; n <= a.order(); ++n) {
        K s = a.coeff(n);
        for (int j = 1; j < n; ++j) s -= (K(j) / K(n)) * l[j] * a.coeff(n - j);
        l[n] = s;
    }
    return TruncatedSeries<K>(a.center, std::move(l));
}

template <class K>
TruncatedSeries<K> pow_series(const TruncatedSeries<K>& a, int e) {
    TruncatedSeries<K> r = TruncatedSeries<K>::constant(K(1), a.order(), a.center);
    TruncatedSeries<K> base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// f(g) for g with zero constant term (Horner in truncated arithmetic).
template <class K>
TruncatedSeries<K> compose(const TruncatedSeries<K>& f, const TruncatedSeries<K>& g) {
    if (g.c[0] != K(0)) throw std::invalid_argument("compose: inner constant term must vanish");
    int ord = std::min(f.order(), g.order());
    TruncatedSeries<K> res = TruncatedSeries<K>::constant(f.coeff(ord), ord, g.center);
    for (int j = ord - 1; j >= 0; --j) {
        res = g.truncated(ord) * res;
        res.c[0] += f.coeff(j);
    }
    return res;
}

// Compositional inverse of f with f(0)=0 and unit linear term: returns g with
// f(g(y)) = y through the truncation order.
template <class K>
TruncatedSeries<K> revert(const TruncatedSeries<K>& f) {
    if (f.c[0] != K(0)) throw std::invalid_argument("revert: constant term must vanish");
    if (f.order() < 1 || f.c[1] == K(0))
        throw std::invalid_argument("revert: linear term must be a unit");
    const int ord = f.order();
    TruncatedSeries<K> g = TruncatedSeries<K>::constant(K(0), ord, f.center);
    if (ord >= 1) g.c[1] = K(1) / f.c[1];
    for (int m = 2; m <= ord; ++m) {
        // g correct through order m-1; fix coefficient m using
        // f(g + c t^m) = f(g) + f_1 c t^m + O(t^{m+1}).
        TruncatedSeries<K> fg = compose(f.truncated(m), g.truncated(m));
        g.c[m] = -fg.coeff(m) / f.c[1];
    }
    return g;
}

// Laurent series t^{low} * (regular part); enough for exact residue
// extraction of the contour-integral moment formulas.
template <class K>
struct LaurentSeries {
    int low = 0;
    TruncatedSeries<K> reg;

    K coeff(int e) const { return reg.coeff(e - low); }
    K residue() const { return coeff(-1); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        return LaurentSeries{a.low + b.low, a.reg * b.reg};
    }
};

template <class K>
LaurentSeries<K> pow_laurent(const LaurentSeries<K>& a, int e) {
    return LaurentSeries<K>{a.low * e, pow_series(a.reg, e)};
}

}  // namespace qmk
