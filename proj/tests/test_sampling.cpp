#include "qmk/atomic_measure.hpp"
#include "qmk/branching.hpp"
#include "qmk/cotransition.hpp"
#include "qmk/rng.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <map>

using namespace qmk;
using qmk_test::within_3sigma;

namespace {
std::map<Signature, long long> draw_many(const Signature& lam, long long samples,
                                         std::uint64_t seed, const CotransitionOptions& opt = {}) {
    std::map<Signature, long long> counts;
    auto rng = rng_for_stream(seed, 0);
    for (long long s = 0; s < samples; ++s) ++counts[cotransition_sample(lam, rng, opt)];
    return counts;
}
}  // namespace

TEST_CASE("cotransition matches branching law") {
    const long long S = 100000;
    for (const Signature& lam :
         {Signature{1, 0}, Signature{2, 0}, Signature{3, 1, 0}, Signature{2, 2, 1}}) {
        auto counts = draw_many(lam, S, 2024);
        CHECK(within_3sigma(counts, branching_law(lam).support, S));
    }
}

TEST_CASE("ties force coordinates, interlacing always holds") {
    Signature lam{2, 2, 1, 1};
    auto rng = rng_for_stream(5, 0);
    for (int s = 0; s < 2000; ++s) {
        auto mu = cotransition_sample(lam, rng);
        CHECK(interlaces(lam, mu));
        CHECK(mu.parts[0] == 2);  // forced by the tie
        CHECK(mu.parts[2] == 1);
    }
    auto counts = draw_many(lam, 50000, 77);
    CHECK(within_3sigma(counts, branching_law(lam).support, 50000));
}

TEST_CASE("wide gaps and negative parts") {
    // dim is 10 and every interlacing mu has dim 1: uniform over 10 atoms
    auto counts = draw_many(Signature{9, 0}, 50000, 3);
    CHECK(within_3sigma(counts, branching_law(Signature{9, 0}).support, 50000));
    auto counts2 = draw_many(Signature{1, -3}, 50000, 4);
    CHECK(within_3sigma(counts2, branching_law(Signature{1, -3}).support, 50000));
}

TEST_CASE("determinism given the seed") {
    Signature lam{4, 2, 0};
    auto a = draw_many(lam, 500, 123);
    auto b = draw_many(lam, 500, 123);
    CHECK(a == b);
    auto rng1 = rng_for_stream(9, 1);
    auto rng2 = rng_for_stream(9, 1);
    for (int i = 0; i < 50; ++i)
        CHECK(cotransition_sample(lam, rng1) == cotransition_sample(lam, rng2));
}

TEST_CASE("floating path agrees with the exact path") {
    // A level large enough to engage the scaled-double path when the cap is
    // lowered; the branching law is still enumerable for the oracle.
    std::vector<long long> parts{5, 4, 4, 3, 2, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    Signature lam(parts);
    const long long S = 40000;

    CotransitionOptions force_exact;
    force_exact.exact_level_cap = 64;
    CotransitionOptions force_float;
    force_float.exact_level_cap = 2;

    auto law = branching_law(lam).support;
    auto exact_counts = draw_many(lam, S, 31, force_exact);
    auto float_counts = draw_many(lam, S, 32, force_float);
    CHECK(within_3sigma(exact_counts, law, S));
    CHECK(within_3sigma(float_counts, law, S));
}

TEST_CASE("projection chain distributions") {
    // restriction of the defining representation: P(mu=(1)) = 1/3 at M = 1
    {
        const long long S = 100000;
        std::map<Signature, long long> counts;
        auto rng = rng_for_stream(11, 0);
        for (long long s = 0; s < S; ++s) ++counts[projection_chain(Signature{1, 0, 0}, 1, rng)];
        std::vector<std::pair<Signature, Rat>> law{{Signature{1}, Rat(1, 3)},
                                                   {Signature{0}, Rat(2, 3)}};
        CHECK(within_3sigma(counts, law, S));
    }
    {
        const long long S = 100000;
        std::map<Signature, long long> counts;
        auto rng = rng_for_stream(12, 0);
        for (long long s = 0; s < S; ++s) ++counts[projection_chain(Signature{1, 1, 0}, 1, rng)];
        std::vector<std::pair<Signature, Rat>> law{{Signature{1}, Rat(2, 3)},
                                                   {Signature{0}, Rat(1, 3)}};
        CHECK(within_3sigma(counts, law, S));
    }
    // trivial representation restricts trivially
    auto rng = rng_for_stream(13, 0);
    for (int s = 0; s < 100; ++s) {
        auto mu = projection_chain(Signature{0, 0, 0, 0, 0}, 2, rng);
        CHECK(mu == Signature{0, 0});
    }
    CHECK_THROWS_AS(projection_chain(Signature{1, 0}, 2, rng), std::invalid_argument);
}

TEST_CASE("sampled d-moments concentrate as N grows") {
    // Var[int x^k d] decreases with N along the staircase/block family.
    auto variance_at = [](int N, std::uint64_t seed) {
        std::vector<long long> parts(N, 0);
        for (int i = 0; i < N / 2; ++i) parts[i] = N / 2;
        Signature lam(parts);
        auto rng = rng_for_stream(seed, 0);
        const int S = 400;
        double sum = 0, sumsq = 0;
        for (int s = 0; s < S; ++s) {
            auto mid = projection_chain(lam, N / 2, rng);
            auto mu = cotransition_sample(mid, rng);
            double dk = rat_to_double(
                moment(difference_measure(InterlacingPair(mid, mu)), 2));
            sum += dk;
            sumsq += dk * dk;
        }
        double mean = sum / S;
        return sumsq / S - mean * mean;
    };
    double v8 = variance_at(8, 21);
    double v32 = variance_at(32, 22);
    CHECK(v32 < v8);
}
