#include "qmk/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmk {

Int weyl_dimension(const Signature& lambda) {
    const auto sh = lambda.shifted();
    const int N = lambda.n();
    Int num = 1, den = 1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            num *= Int(sh[i] - sh[j]);
            den *= Int(j - i);
        }
    Int q = num / den;
    if (q * den != num) throw std::logic_error("weyl_dimension: non-integer ratio");
    return q;
}

std::vector<Signature> enumerate_interlacing(const Signature& lambda, long long cap) {
    const int N = lambda.n();
    if (N < 2) throw std::invalid_argument("enumerate_interlacing: need length >= 2");
    Int count = 1;
    for (int i = 0; i + 1 < N; ++i) count *= Int(lambda.parts[i] - lambda.parts[i + 1] + 1);
    if (count > cap)
        throw std::runtime_error("interlacing enumeration cap exceeded (" + count.str() +
                                 " patterns); use cotransition_sample instead");
    std::vector<Signature> out;
    out.reserve(count.convert_to<size_t>());
    std::vector<long long> mu(N - 1);
    for (int i = 0; i < N - 1; ++i) mu[i] = lambda.parts[i + 1];
    while (true) {
        out.push_back(Signature(mu));
        int i = N - 2;
        while (i >= 0 && mu[i] == lambda.parts[i]) {
            mu[i] = lambda.parts[i + 1];
            --i;
        }
        if (i < 0) break;
        ++mu[i];
    }
    return out;
}

namespace {
// det of a rational matrix by Gaussian elimination with pivoting.
Rat det_rational(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

Rat schur_gt(const std::vector<long long>& lambda, const std::vector<Rat>& points, int nvars) {
    if (nvars == 1) return rat_pow(points[0], lambda[0]);
    long long top_weight = 0;
    for (long long p : lambda) top_weight += p;
    Rat acc = 0;
    std::vector<long long> mu(nvars - 1);
    for (int i = 0; i < nvars - 1; ++i) mu[i] = lambda[i + 1];
    while (true) {
        long long w = 0;
        for (long long p : mu) w += p;
        acc += schur_gt(mu, points, nvars - 1) * rat_pow(points[nvars - 1], top_weight - w);
        int i = nvars - 2;
        while (i >= 0 && mu[i] == lambda[i]) {
            mu[i] = lambda[i + 1];
            --i;
        }
        if (i < 0) break;
        ++mu[i];
    }
    return acc;
}
}  // namespace

Rat schur_eval(const Signature& lambda, const std::vector<Rat>& points) {
    const int N = lambda.n();
    if (static_cast<int>(points.size()) != N)
        throw std::invalid_argument("schur_eval: need exactly N evaluation points");
    // Shift so all parts are nonnegative; s_lambda = (prod x)^shift * s_{lambda - shift}.
    const long long shift = std::min<long long>(lambda.parts.back(), 0);
    Rat prefactor = 1;
    if (shift != 0) {
        for (const Rat& x : points) {
            if (x == 0) throw std::invalid_argument("schur_eval: zero point with negative parts");
            prefactor *= rat_pow(x, shift);
        }
    }
    std::vector<long long> lam(lambda.parts);
    for (auto& p : lam) p -= shift;

    bool distinct = true;
    for (int i = 0; i < N && distinct; ++i)
        for (int j = i + 1; j < N; ++j)
            if (points[i] == points[j]) {
                distinct = false;
                break;
            }

    if (!distinct) {
        if (weyl_dimension(lambda) > 1000000)
            throw std::runtime_error("schur_eval: GT summation too large at coincident points");
        return prefactor * schur_gt(lam, points, N);
    }

    std::vector<std::vector<Rat>> num(N, std::vector<Rat>(N));
    std::vector<std::vector<Rat>> den(N, std::vector<Rat>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            num[i][j] = rat_pow(points[i], lam[j] + N - 1 - j);
            den[i][j] = rat_pow(points[i], N - 1 - j);
        }
    Rat d = det_rational(std::move(den));
    if (d == 0) throw std::logic_error("schur_eval: vanishing Vandermonde at distinct points");
    return prefactor * det_rational(std::move(num)) / d;
}

}  // namespace qmk
