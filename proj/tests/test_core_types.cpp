#include "qmk/atomic_measure.hpp"
#include "qmk/grid.hpp"
#include "qmk/rectangular_diagram.hpp"
#include "qmk/rng.hpp"
#include "qmk/signature.hpp"

#include <doctest.h>

using namespace qmk;

TEST_CASE("signature invariants") {
    Signature s{3, 1, 0};
    CHECK(s.n() == 3);
    CHECK(s.shifted() == std::vector<long long>{5, 2, 0});
    CHECK_THROWS_AS(Signature({0, 1}), std::invalid_argument);
    Signature neg{1, -2};  // negative parts allowed
    CHECK(neg.shifted() == std::vector<long long>{2, -2});
}

TEST_CASE("interlaces") {
    CHECK(interlaces(Signature{1, 0}, Signature{0}));
    CHECK_FALSE(interlaces(Signature{1, 0}, Signature{2}));
    CHECK(interlaces(Signature{3, 1, 0}, Signature{2, 1}));
    CHECK_THROWS_AS(interlaces(Signature{3, 1, 0}, Signature{2}), std::invalid_argument);
    CHECK_THROWS_AS(InterlacingPair(Signature{1, 0}, Signature{2}), std::invalid_argument);
}

TEST_CASE("counting measure") {
    auto m = counting_measure(Signature{0, 0, 0});
    REQUIRE(m.atoms.size() == 3);
    CHECK(m.atoms[0].first == Rat(0));
    CHECK(m.atoms[1].first == Rat(1, 3));
    CHECK(m.atoms[2].first == Rat(2, 3));
    for (auto& [loc, w] : m.atoms) CHECK(w == Rat(1, 3));
    CHECK(m.is_probability());

    auto m2 = counting_measure(Signature{1, 0});
    CHECK(m2.atoms[0].first == Rat(0));
    CHECK(m2.atoms[1].first == Rat(1));

    auto m3 = counting_measure(Signature{2, 2, 1});
    CHECK(m3.atoms[0].first == Rat(1, 3));
    CHECK(m3.atoms[1].first == Rat(1));
    CHECK(m3.atoms[2].first == Rat(4, 3));
}

TEST_CASE("difference measure cancellation and mass") {
    auto d1 = difference_measure(InterlacingPair(Signature{0, 0}, Signature{0}));
    REQUIRE(d1.atoms.size() == 1);
    CHECK(d1.atoms[0] == std::pair<Rat, Rat>(Rat(1, 2), Rat(1)));

    auto d2 = difference_measure(InterlacingPair(Signature{1, 0}, Signature{1}));
    REQUIRE(d2.atoms.size() == 3);
    CHECK(d2.atoms[0] == std::pair<Rat, Rat>(Rat(0), Rat(1)));
    CHECK(d2.atoms[1] == std::pair<Rat, Rat>(Rat(1, 2), Rat(-1)));
    CHECK(d2.atoms[2] == std::pair<Rat, Rat>(Rat(1), Rat(1)));

    auto d3 = difference_measure(InterlacingPair(Signature{2, 0}, Signature{1}));
    REQUIRE(d3.atoms.size() == 3);
    CHECK(d3.atoms[2] == std::pair<Rat, Rat>(Rat(3, 2), Rat(1)));
    CHECK(d3.total_weight() == 1);
}

TEST_CASE("moments of atomic measures") {
    CHECK(moment(counting_measure(Signature{0, 0, 0}), 1) == Rat(1, 3));
    CHECK(moment(counting_measure(Signature{5, 2, 1, 0}), 0) == Rat(1));
    auto d = difference_measure(InterlacingPair(Signature{0, 0}, Signature{0}));
    CHECK(moment(d, 3) == Rat(1, 8));
}

TEST_CASE("rectangular diagram construction") {
    auto d = build_rectangular_diagram({Rat(0), Rat(1)}, {Rat(1, 2)});
    CHECK(d.z0 == Rat(1, 2));
    CHECK(d.evaluate(Rat(0)) == Rat(1, 2));
    CHECK(d.evaluate(Rat(1, 2)) == Rat(1));
    CHECK(d.evaluate(Rat(1)) == Rat(1, 2));
    CHECK(d.evaluate(Rat(-2)) == Rat(5, 2));

    auto point = build_rectangular_diagram({Rat(3, 2)}, {});
    CHECK(point.z0 == Rat(3, 2));
    CHECK(point.evaluate(Rat(5)) == Rat(7, 2));

    auto d3 = build_rectangular_diagram({Rat(0), Rat(1), Rat(2)}, {Rat(1, 2), Rat(3, 2)});
    CHECK(d3.z0 == Rat(1));
    CHECK(d3.evaluate(Rat(0)) == Rat(1));
    CHECK(d3.evaluate(Rat(1, 2)) == Rat(3, 2));
    CHECK(d3.evaluate(Rat(1)) == Rat(1));

    CHECK_THROWS_AS(build_rectangular_diagram({Rat(0), Rat(1)}, {Rat(2)}), std::invalid_argument);
    CHECK_THROWS_AS(build_rectangular_diagram({Rat(1), Rat(0)}, {Rat(1, 2)}), std::invalid_argument);
}

TEST_CASE("p_k on rectangular diagrams") {
    auto d = build_rectangular_diagram({Rat(0), Rat(1)}, {Rat(1, 2)});
    CHECK(p_k_rectangular(d, 1) == Rat(1, 2));
    auto point = build_rectangular_diagram({Rat(7, 2)}, {});
    CHECK(p_k_rectangular(point, 2) == Rat(49, 4));
    auto d3 = build_rectangular_diagram({Rat(0), Rat(1), Rat(2)}, {Rat(1, 2), Rat(3, 2)});
    CHECK(p_k_rectangular(d3, 2) == Rat(5, 2));
}

TEST_CASE("p_k on grids matches the exact rectangular values") {
    // single corner at 1, declared on [0,2]
    GridDiagram corner = make_grid_diagram(0.0, 2.0, 1.0, 2000, 0.5,
                                           [](double x) { return std::abs(x - 1.0); },
                                           DiagramClass::D);
    CHECK(p_k_grid(corner, 1) == doctest::Approx(1.0).epsilon(1e-6));

    auto rect = build_rectangular_diagram({Rat(0), Rat(1)}, {Rat(1, 2)});
    auto g = sample_rectangular(rect, 4000);
    CHECK(p_k_grid(g, 1) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(p_k_grid(g, 2) == doctest::Approx(3.0 / 4).epsilon(1e-4));
    CHECK(p_k_grid(g, 3) == doctest::Approx(rat_to_double(p_k_rectangular(rect, 3))).epsilon(1e-4));

    GridDiagram coarse = make_grid_diagram(0.0, 1.0, 0.5, 8, 0.0,
                                           [](double x) { return std::abs(x - 0.5); },
                                           DiagramClass::D);
    CHECK_THROWS_AS(p_k_grid(coarse, 2), std::invalid_argument);
}

// Random interlacing pairs from signatures: p_k of the scaled rectangular
// diagram equals sum x^k - sum y^k equals the moment of d[lambda,mu].
TEST_CASE("interlacing pair / diagram / difference-measure identity") {
    auto rng = rng_for_stream(1234, 7);
    for (int trial = 0; trial < 40; ++trial) {
        const int N = 2 + int(rng() % 4);
        std::vector<long long> lam(N);
        lam[N - 1] = int(rng() % 5) - 2;
        for (int i = N - 2; i >= 0; --i) lam[i] = lam[i + 1] + int(rng() % 4);
        Signature lambda(lam);
        std::vector<long long> mu(N - 1);
        for (int i = 0; i < N - 1; ++i)
            mu[i] = lam[i + 1] + int(rng() % (lam[i] - lam[i + 1] + 1));
        Signature m(mu);
        InterlacingPair pair(lambda, m);

        auto lsh = lambda.shifted();
        auto msh = m.shifted();
        std::vector<Rat> xs, ys;
        for (int i = N - 1; i >= 0; --i) xs.emplace_back(Rat(lsh[i], N));
        for (int i = N - 2; i >= 0; --i) ys.emplace_back(Rat(msh[i], N));
        auto diag = build_rectangular_diagram(xs, ys);
        auto dm = difference_measure(pair);
        for (int k = 1; k <= 8; ++k) {
            Rat direct = 0;
            for (auto& x : xs) direct += rat_pow(x, k);
            for (auto& y : ys) direct -= rat_pow(y, k);
            CHECK(p_k_rectangular(diag, k) == direct);
            CHECK(moment(dm, k) == direct);
        }
        CHECK(dm.total_weight() == 1);

        auto g = sample_rectangular(diag, 3000);
        g.validate(1e-6);
        for (int k = 1; k <= 4; ++k) {
            double exact = rat_to_double(p_k_rectangular(diag, k));
            CHECK(p_k_grid(g, k) == doctest::Approx(exact).epsilon(2e-4));
        }
    }
}

TEST_CASE("grid validation catches class violations") {
    auto uni = make_grid_density(0, 1, 100, [](double) { return 1.0; }, DensityClass::MTilde);
    CHECK_NOTHROW(uni.validate(1e-6));
    auto bad = make_grid_density(0, 1, 100, [](double) { return 1.0; }, DensityClass::MTilde);
    for (auto& x : bad.v) x = 1.5;
    CHECK_THROWS_AS(bad.validate(1e-3), std::invalid_argument);

    auto lip = make_grid_diagram(0, 1, 0.5, 100, 0.5,
                                 [](double x) { return std::abs(x - 0.5); }, DiagramClass::D);
    CHECK_NOTHROW(lip.validate(1e-6));
    lip.v[50] += 0.3;
    CHECK_THROWS_AS(lip.validate(1e-3), std::invalid_argument);
}

TEST_CASE("faulhaber interval power sums") {
    auto rng = rng_for_stream(99, 1);
    for (int trial = 0; trial < 50; ++trial) {
        long long p = int(rng() % 41) - 20;
        long long q = p + int(rng() % 30);
        int j = int(rng() % 7);
        Int direct = 0;
        for (long long mm = p; mm <= q; ++mm) direct += int_pow(Int(mm), j);
        CHECK(interval_power_sum(Int(p), Int(q), j) == direct);
    }
}
