#include "qmk/multipoly.hpp"

#include "qmk/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmk {

MultiPoly MultiPoly::constant(int n, const Rat& c) {
    MultiPoly p{n, {}};
    if (c != 0) p.terms[std::vector<int>(n, 0)] = c;
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<int> e, const Rat& c) {
    MultiPoly p{static_cast<int>(e.size()), {}};
    if (c != 0) p.terms[std::move(e)] = c;
    return p;
}

void MultiPoly::add_term(const std::vector<int>& e, const Rat& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r = zero(nvars);
    std::vector<int> e(nvars);
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r = zero(nvars);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms) r.terms[e] = coeff * c;
    return r;
}

MultiPoly MultiPoly::subst_one(int var) const {
    MultiPoly r = zero(nvars);
    std::vector<int> e(nvars);
    for (const auto& [ex, c] : terms) {
        e = ex;
        e[var] = 0;
        r.add_term(e, c);
    }
    return r;
}

MultiPoly vandermonde_poly(int nvars) {
    MultiPoly v = MultiPoly::constant(nvars, 1);
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            std::vector<int> ei(nvars, 0), ej(nvars, 0);
            ei[i] = 1;
            ej[j] = 1;
            v = v * (MultiPoly::monomial(ei, 1) - MultiPoly::monomial(ej, 1));
        }
    return v;
}

MultiPoly divide_by_binomial(const MultiPoly& p, int i, int j) {
    // View p as a polynomial in x_i with coefficients c_d; the quotient by
    // (x_i - x_j) satisfies q_{d-1} = c_d + x_j q_d running top-down.
    int maxdeg = 0;
    for (const auto& [e, c] : p.terms) maxdeg = std::max(maxdeg, e[i]);
    std::vector<MultiPoly> cd(maxdeg + 1, MultiPoly::zero(p.nvars));
    for (const auto& [e, c] : p.terms) {
        std::vector<int> rest = e;
        int d = rest[i];
        rest[i] = 0;
        cd[d].add_term(rest, c);
    }
    std::vector<int> xj(p.nvars, 0);
    xj[j] = 1;
    MultiPoly xjp = MultiPoly::monomial(xj, 1);
    std::vector<MultiPoly> q(std::max(maxdeg, 1), MultiPoly::zero(p.nvars));
    MultiPoly carry = MultiPoly::zero(p.nvars);  // q_d, starts above top degree
    for (int d = maxdeg; d >= 1; --d) {
        MultiPoly qd = cd[d] + xjp * carry;
        q[d - 1] = qd;
        carry = qd;
    }
    MultiPoly remainder = cd[0] + xjp * carry;
    if (!remainder.is_zero()) throw std::logic_error("divide_by_binomial: nonzero remainder");
    MultiPoly result = MultiPoly::zero(p.nvars);
    for (int d = 0; d < static_cast<int>(q.size()); ++d) {
        std::vector<int> xi(p.nvars, 0);
        xi[i] = d;
        result = result + q[d] * MultiPoly::monomial(xi, 1);
    }
    return result;
}

namespace {
void schur_poly_rec(const std::vector<long long>& lam, int level, int nvars,
                    std::vector<int>& expo, const Rat& coeff, MultiPoly& out) {
    if (level == 1) {
        expo[0] = static_cast<int>(lam[0]);
        out.add_term(expo, coeff);
        return;
    }
    long long top = 0;
    for (long long p : lam) top += p;
    std::vector<long long> mu(level - 1);
    for (int i = 0; i < level - 1; ++i) mu[i] = lam[i + 1];
    while (true) {
        long long w = 0;
        for (long long p : mu) w += p;
        expo[level - 1] = static_cast<int>(top - w);
        schur_poly_rec(mu, level - 1, nvars, expo, coeff, out);
        int i = level - 2;
        while (i >= 0 && mu[i] == lam[i]) {
            mu[i] = lam[i + 1];
            --i;
        }
        if (i < 0) break;
        ++mu[i];
    }
    expo[level - 1] = 0;
}
}  // namespace

MultiPoly schur_poly(const Signature& lambda, int nvars) {
    if (lambda.parts.back() < 0)
        throw std::invalid_argument("schur_poly: parts must be nonnegative (shift first)");
    if (nvars < lambda.n()) throw std::invalid_argument("schur_poly: not enough variables");
    if (weyl_dimension(lambda) > 2000000)
        throw std::runtime_error("schur_poly: GT enumeration too large");
    MultiPoly out = MultiPoly::zero(nvars);
    std::vector<int> expo(nvars, 0);
    schur_poly_rec(lambda.parts, lambda.n(), nvars, expo, Rat(1), out);
    return out;
}

MultiPoly apply_power_sum_operator(int k, const MultiPoly& f) {
    if (k < 1) throw std::invalid_argument("apply_power_sum_operator: k must be >= 1");
    const int n = f.nvars;
    MultiPoly g = vandermonde_poly(n) * f;
    MultiPoly acted = MultiPoly::zero(n);
    for (const auto& [e, c] : g.terms) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += int_pow(Int(e[i]), k);
        acted.add_term(e, c * Rat(s));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) acted = divide_by_binomial(acted, i, j);
    return acted;
}

bool verify_projection_sgf(const Signature& lambda) {
    const int N = lambda.n();
    const long long shift = std::min<long long>(lambda.parts.back(), 0);
    std::vector<long long> lam(lambda.parts);
    for (auto& p : lam) p -= shift;
    Signature shifted(lam);  // same branching structure, polynomial Schur

    auto law = branching_law(shifted);
    MultiPoly lhs = MultiPoly::zero(N);
    for (const auto& [mu, prob] : law.support) {
        MultiPoly smu = schur_poly(mu, N);  // embedded, last variable unused
        lhs = lhs + smu * (prob / Rat(weyl_dimension(mu)));
    }
    MultiPoly rhs = schur_poly(shifted, N).subst_one(N - 1) * Rat(1, weyl_dimension(shifted));
    return lhs == rhs;
}

}  // namespace qmk
