#include "qmk/cotransition.hpp"

#include "qmk/rational.hpp"
#include "qmk/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qmk {

namespace {

struct Interval {
    long long lo, hi;  // inclusive; nonempty
    bool forced() const { return lo == hi; }
    long long width() const { return hi - lo + 1; }
};

// Exact determinant, fraction-free Bareiss.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

struct StepContext {
    const std::vector<Interval>& iv;
    const std::vector<long long>& value;  // coordinates decided so far
    int j;                                // coordinate being sampled
    std::vector<int> future_free;         // indices > j with width > 1
    std::vector<long long> future_forced; // forced values at indices > j
};

// ----- exact path ---------------------------------------------------------

// Candidate weight: prod_{s<j} (v_s - v) * prod future forced (v - m_s) * D(v)
// where D(v) marginalizes the future free coordinates by multilinearity.
std::vector<Int> exact_candidate_weights(const StepContext& ctx) {
    const Interval& me = ctx.iv[ctx.j];
    const int f = static_cast<int>(ctx.future_free.size());
    const long long center = (me.lo + me.hi) / 2;

    // Weighted power-sum rows for the future free intervals. The weight
    // h(m) = prod over future forced |m_s - m| carries the cross factors.
    std::vector<std::vector<Int>> rows(f, std::vector<Int>(f + 1));
    for (int r = 0; r < f; ++r) {
        const Interval& I = ctx.iv[ctx.future_free[r]];
        for (int p = 0; p <= f; ++p) rows[r][p] = 0;
        if (ctx.future_forced.empty() && !I.forced()) {
            // Unweighted rows: Faulhaber interval power sums, no loop over m.
            for (int p = 0; p <= f; ++p)
                rows[r][p] = interval_power_sum(Int(I.lo - center), Int(I.hi - center), p);
            continue;
        }
        for (long long m = I.lo; m <= I.hi; ++m) {
            Int h = 1;
            for (long long s : ctx.future_forced) h *= Int(std::llabs(s - m));
            Int pw = 1;
            const Int base = Int(m - center);
            for (int p = 0; p <= f; ++p) {
                rows[r][p] += h * pw;
                pw *= base;
            }
        }
    }

    std::vector<Int> weights;
    weights.reserve(me.width());
    int sign_norm = 0;
    for (long long v = me.lo; v <= me.hi; ++v) {
        Int w = 1;
        for (int s = 0; s < ctx.j; ++s) w *= Int(ctx.value[s] - v);
        for (long long m : ctx.future_forced) w *= Int(v - m);
        if (f > 0) {
            std::vector<std::vector<Int>> mat(f + 1, std::vector<Int>(f + 1));
            Int pw = 1;
            const Int base = Int(v - center);
            for (int p = 0; p <= f; ++p) {
                mat[0][p] = pw;
                pw *= base;
            }
            for (int r = 0; r < f; ++r) mat[r + 1] = rows[r];
            Int det = bareiss_det(std::move(mat));
            if (sign_norm == 0) sign_norm = det < 0 ? -1 : 1;
            w *= sign_norm < 0 ? Int(-det) : det;
        }
        if (w <= 0) throw std::logic_error("cotransition: nonpositive exact candidate weight");
        weights.push_back(std::move(w));
    }
    return weights;
}

long long sample_exact(const StepContext& ctx, std::mt19937_64& rng) {
    auto weights = exact_candidate_weights(ctx);
    Int total = 0;
    for (const Int& w : weights) total += w;
    Int r = uniform_below(rng, total);
    Int cum = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        cum += weights[i];
        if (r < cum) return ctx.iv[ctx.j].lo + static_cast<long long>(i);
    }
    return ctx.iv[ctx.j].hi;  // unreachable
}

// ----- scaled floating path ------------------------------------------------

// Null vector of the f x (f+1) row matrix: coefficients of the degree-f
// polynomial whose evaluations give the marginalized determinant. Gaussian
// elimination with partial pivoting; returns false when a pivot collapses.
bool null_vector(std::vector<std::vector<long double>> R, std::vector<long double>& x) {
    const int f = static_cast<int>(R.size());
    x.assign(f + 1, 0.0L);
    for (int c = 0; c < f; ++c) {
        int piv = c;
        for (int r = c + 1; r < f; ++r)
            if (std::fabs((double)R[r][c]) > std::fabs((double)R[piv][c])) piv = r;
        if (R[piv][c] == 0.0L) return false;
        std::swap(R[piv], R[c]);
        for (int r = c + 1; r < f; ++r) {
            long double m = R[r][c] / R[c][c];
            for (int cc = c; cc <= f; ++cc) R[r][cc] -= m * R[c][cc];
        }
    }
    x[f] = 1.0L;
    for (int r = f - 1; r >= 0; --r) {
        long double s = 0.0L;
        for (int c = r + 1; c <= f; ++c) s += R[r][c] * x[c];
        if (R[r][r] == 0.0L) return false;
        x[r] = -s / R[r][r];
    }
    return true;
}

// Returns false when a stability guard trips and the exact path must decide.
bool sample_float(const StepContext& ctx, std::mt19937_64& rng, const CotransitionOptions& opt,
                  long long& out) {
    const Interval& me = ctx.iv[ctx.j];
    const int f = static_cast<int>(ctx.future_free.size());
    const long double center = 0.5L * (me.lo + me.hi);

    long double span = 1.0L;
    for (int r = 0; r < f; ++r) {
        const Interval& I = ctx.iv[ctx.future_free[r]];
        span = std::max(span, (long double)std::fabs((double)I.lo - (double)center));
        span = std::max(span, (long double)std::fabs((double)I.hi - (double)center));
    }

    std::vector<std::vector<long double>> R(f, std::vector<long double>(f + 1));
    for (int r = 0; r < f; ++r) {
        const Interval& I = ctx.iv[ctx.future_free[r]];
        // log-scaled weights keep the forced-product factors in range
        long double max_lh = -1e30L;
        std::vector<long double> lh(I.width());
        for (long long m = I.lo; m <= I.hi; ++m) {
            long double s = 0.0L;
            for (long long ff : ctx.future_forced) s += std::log((long double)std::llabs(ff - m));
            lh[m - I.lo] = s;
            max_lh = std::max(max_lh, s);
        }
        for (long long m = I.lo; m <= I.hi; ++m) {
            long double h = std::exp(lh[m - I.lo] - max_lh);
            long double base = (m - center) / span;
            long double pw = 1.0L;
            for (int p = 0; p <= f; ++p) {
                R[r][p] += h * pw;
                pw *= base;
            }
        }
    }

    std::vector<long double> coeff;
    if (f > 0 && !null_vector(std::move(R), coeff)) return false;

    const long long W = me.width();
    std::vector<long double> lw(W);  // log of the positive product part
    long double max_lw = -1e30L;
    for (long long v = me.lo; v <= me.hi; ++v) {
        long double s = 0.0L;
        for (int p = 0; p < ctx.j; ++p) s += std::log((long double)(ctx.value[p] - v));
        for (long long m : ctx.future_forced) s += std::log((long double)(v - m));
        lw[v - me.lo] = s;
        max_lw = std::max(max_lw, s);
    }

    std::vector<long double> A(W);
    int sign_norm = 0;
    for (long long v = me.lo; v <= me.hi; ++v) {
        long double det = 1.0L, mag = 1.0L;
        if (f > 0) {
            long double base = (v - center) / span, pw = 1.0L;
            det = 0.0L;
            mag = 0.0L;
            for (int p = 0; p <= f; ++p) {
                det += coeff[p] * pw;
                mag += std::fabs((double)(coeff[p] * pw));
                pw *= base;
            }
            if (mag <= 0.0L || std::fabs((double)det) < opt.cancel_guard * mag) return false;
        }
        if (sign_norm == 0) sign_norm = det < 0 ? -1 : 1;
        long double a = std::exp(lw[v - me.lo] - max_lw) * det * sign_norm;
        if (!(a > 0.0L)) return false;
        A[v - me.lo] = a;
    }

    long double total = 0.0L;
    for (long double a : A) total += a;
    const long double target = (long double)uniform01(rng) * total;
    long double cum = 0.0L;
    const long double margin = opt.float_margin * total;
    for (long long i = 0; i < W; ++i) {
        cum += A[i];
        if (target < cum) {
            // target must sit comfortably inside the bin [cum - A[i], cum)
            if (cum - target < margin || target - (cum - A[i]) < margin) return false;
            out = me.lo + i;
            return true;
        }
    }
    out = me.hi;
    return true;
}

}  // namespace

Signature cotransition_sample(const Signature& lambda, std::mt19937_64& rng,
                              const CotransitionOptions& opt) {
    const int n = lambda.n();
    if (n < 2) throw std::invalid_argument("cotransition_sample: need N >= 2");
    std::vector<long long> lt(n);
    for (int i = 0; i < n; ++i) lt[i] = lambda.parts[i] + n - 1 - i;

    // Shifted coordinates of mu range over disjoint intervals
    // [lt[j+1], lt[j]-1]; ties in lambda force the coordinate.
    std::vector<Interval> iv(n - 1);
    for (int j = 0; j + 1 < n; ++j) iv[j] = Interval{lt[j + 1], lt[j] - 1};

    std::vector<long long> value(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
        if (iv[j].forced()) {
            value[j] = iv[j].lo;
            continue;
        }
        StepContext ctx{iv, value, j, {}, {}};
        for (int s = j + 1; s + 1 < n; ++s) {
            if (iv[s].forced())
                ctx.future_forced.push_back(iv[s].lo);
            else
                ctx.future_free.push_back(s);
        }
        const bool exact = (n <= opt.exact_level_cap) || ctx.future_free.empty();
        if (exact) {
            value[j] = sample_exact(ctx, rng);
        } else {
            long long v;
            if (sample_float(ctx, rng, opt, v))
                value[j] = v;
            else
                value[j] = sample_exact(ctx, rng);
        }
    }

    std::vector<long long> mu(n - 1);
    for (int j = 0; j + 1 < n; ++j) mu[j] = value[j] - (n - 2 - j);
    Signature result(mu);
    if (!interlaces(lambda, result))
        throw std::logic_error("cotransition_sample: produced non-interlacing signature");
    return result;
}

Signature projection_chain(const Signature& lambda, int target_level, std::mt19937_64& rng,
                           const CotransitionOptions& opt) {
    if (target_level < 1 || target_level >= lambda.n())
        throw std::invalid_argument("projection_chain: need 1 <= M < N");
    Signature cur = lambda;
    while (cur.n() > target_level) cur = cotransition_sample(cur, rng, opt);
    return cur;
}

}  // namespace qmk
