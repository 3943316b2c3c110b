#include "qmk/rng.hpp"
#include "qmk/truncated_series.hpp"

#include <doctest.h>

using namespace qmk;
using RS = TruncatedSeries<Rat>;

namespace {
RS random_series(std::mt19937_64& rng, int order, bool zero_const, bool unit_linear) {
    std::vector<Rat> c(order + 1);
    for (int j = 0; j <= order; ++j)
        c[j] = Rat(int(rng() % 9) - 4, 1 + int(rng() % 4));
    if (zero_const) c[0] = 0;
    if (unit_linear && c.size() > 1 && c[1] == 0) c[1] = Rat(1, 2);
    return RS(0, std::move(c));
}
}  // namespace

TEST_CASE("series ring basics") {
    RS t = RS::var(6);
    RS one = RS::constant(Rat(1), 6);
    auto p = (one + t) * (one - t);
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(2) == Rat(-1));
    CHECK(p.coeff(1) == Rat(0));
    CHECK(reciprocal(one - t).coeff(5) == Rat(1));  // geometric series
    CHECK(derivative(pow_series(one + t, 4)).coeff(2) == Rat(12));
    CHECK_THROWS_AS(reciprocal(t), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse") {
    auto rng = rng_for_stream(7, 3);
    for (int trial = 0; trial < 25; ++trial) {
        RS s = random_series(rng, 10, /*zero_const=*/true, false);
        RS one = RS::constant(Rat(1), 10);
        CHECK(exp_series(log_series(one + s)) == one + s);
        CHECK(log_series(exp_series(s)) == s);
    }
}

TEST_CASE("reversion is an involution") {
    auto rng = rng_for_stream(8, 4);
    for (int trial = 0; trial < 25; ++trial) {
        RS s = random_series(rng, 9, /*zero_const=*/true, /*unit_linear=*/true);
        RS back = revert(revert(s));
        CHECK(back == s);
        // and it actually inverts composition
        auto t = RS::var(9);
        CHECK(compose(s, revert(s)) == t);
    }
}

TEST_CASE("laurent residue extraction") {
    // 1/t * (1 + 2t + 3t^2) has residue 1; squared it is t^{-2}(...)
    LaurentSeries<Rat> l{-1, RS(0, {Rat(1), Rat(2), Rat(3)})};
    CHECK(l.residue() == Rat(1));
    auto sq = l * l;
    CHECK(sq.low == -2);
    CHECK(sq.residue() == Rat(4));  // coeff of t^1 in (1+2t+3t^2)^2 is 4
    CHECK(pow_laurent(l, 2).residue() == Rat(4));
}
