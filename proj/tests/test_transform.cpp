#include "qmk/dmk.hpp"
#include "qmk/gallery.hpp"
#include "qmk/quadrature.hpp"
#include "qmk/transform.hpp"

#include <doctest.h>

#include <cmath>

using namespace qmk;

namespace {
GridDensity uniform01(int cells = 2000) {
    return make_grid_density(0, 1, cells, [](double) { return 1.0; }, DensityClass::MTilde);
}

GridDiagram corner_at_one(int cells = 2000) {
    return make_grid_diagram(0, 1, 1.0, cells, 0.5, [](double x) { return std::abs(x - 1.0); },
                             DiagramClass::DTilde);
}
}  // namespace

TEST_CASE("cauchy transform closed forms") {
    auto psi = uniform01();
    CHECK(std::abs(cauchy_G(psi, cplx(2.0, 0.0)) - cplx(std::log(2.0), 0.0)) < 1e-10);

    auto wide = make_grid_density(0, 2, 2000, [](double) { return 0.5; }, DensityClass::MTilde);
    CHECK(std::abs(cauchy_G(wide, cplx(3.0, 0.0)) - cplx(0.5 * std::log(3.0), 0.0)) < 1e-10);

    CHECK_THROWS_AS(cauchy_G(psi, cplx(0.5, 0.0)), std::invalid_argument);

    // Schwarz reflection at machine precision
    for (cplx u : {cplx(0.3, 0.7), cplx(-1.0, 0.2), cplx(2.5, 1.5)}) {
        cplx up = cauchy_G(psi, u), dn = cauchy_G(psi, std::conj(u));
        CHECK(std::abs(dn - std::conj(up)) < 1e-14);
    }
}

TEST_CASE("r-functions on the trivial pair") {
    auto psi = uniform01();
    auto w = corner_at_one();
    // R_psi(u) = -1 + u/(u-1) = 1/(u-1) and R_w the same
    for (double u : {1.5, 2.0, 3.0, 10.0, -0.5, -2.0}) {
        CHECK(std::abs(r_psi(psi, cplx(u, 0)) - cplx(1.0 / (u - 1.0), 0)) < 1e-6);
        CHECK(std::abs(r_w(w, cplx(u, 0)) - cplx(1.0 / (u - 1.0), 0)) < 1e-6);
    }
    for (cplx u : standard_probe_set(0, 1))
        CHECK(std::abs(r_psi(psi, u) - r_w(w, u)) < 1e-6);
    // decay at infinity
    CHECK(std::abs(r_psi(psi, cplx(1e4, 0.0))) < 2e-4);

    // empty diagram: sigma vanishes and R_w = 1/u
    auto empty = make_grid_diagram(0, 0, 0, 200, 1.0, [](double x) { return std::abs(x); },
                                   DiagramClass::D);
    CHECK(std::abs(r_w(empty, cplx(2.0, 0.5)) - 1.0 / cplx(2.0, 0.5)) < 1e-9);
    CHECK_THROWS_AS(r_w(empty, cplx(0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("r_w principal value region between 0 and the support") {
    // diagram |t - 3| declared on [2.5, 3.5]: real probes in (0, 2.5) hit the
    // sigma support extension and continue to u R_w = u/(u-3)
    auto w = make_grid_diagram(2.5, 3.5, 3.0, 1000, 0.5,
                               [](double x) { return std::abs(x - 3.0); }, DiagramClass::D);
    for (double u : {0.5, 1.0, 2.0, -1.0, 4.5, 6.0}) {
        CHECK(std::abs(r_w(w, cplx(u, 0.0)) - cplx(1.0 / (u - 3.0), 0.0)) < 1e-6);
    }
    CHECK(std::abs(r_w(w, cplx(1.0, 2.0)) - 1.0 / (cplx(1.0, 2.0) - 3.0)) < 1e-6);
}

TEST_CASE("r_mu moment expansion for the semicircle") {
    auto mu = semicircle(4000);
    const double u = 10.0;
    // m0=1, m1=0, m2=1, m3=0
    const double expansion = 1.0 / u + 1.0 / (u * u * u);
    CHECK(std::abs(r_mu(mu, cplx(u, 0.0)).real() - expansion) < 5e-5);
    const double closed = 0.5 * (u - std::sqrt(u * u - 4.0));
    CHECK(std::abs(r_mu(mu, cplx(u, 0.0)).real() - closed) < 1e-6);
}

TEST_CASE("stieltjes inversion of closed-form transforms") {
    // uniform[0,1]
    auto inv = stieltjes_invert([](cplx u) { return std::log(u / (u - 1.0)); }, 0, 1, 2000);
    REQUIRE(!inv.degenerate);
    const auto& g = inv.density;
    double sup = 0;
    for (size_t i = 0; i < g.t.size(); ++i) {
        if (g.t[i] < 0.02 || g.t[i] > 0.98) continue;
        sup = std::max(sup, std::abs(g.v[i] - 1.0));
    }
    CHECK(sup <= 5e-3);
    CHECK(g.mass() == doctest::Approx(1.0).epsilon(1e-9));

    // point mass: flagged degenerate with a mass/location summary
    auto pm = stieltjes_invert([](cplx u) { return 1.0 / (u - 0.4); }, 0, 1, 2000);
    REQUIRE(pm.degenerate);
    REQUIRE(pm.atoms.size() == 1);
    CHECK(pm.atoms[0].first == doctest::Approx(0.4).epsilon(2e-2));
    CHECK(pm.atoms[0].second == doctest::Approx(1.0).epsilon(6e-2));

    // round trip through r_mu of the semicircle
    auto mu = semicircle(4000);
    auto back = stieltjes_invert([&](cplx u) { return r_mu(mu, u); }, -2, 2, 2000);
    REQUIRE(!back.degenerate);
    CHECK(sup_distance_interior(back.density, mu) < 1e-2);

    // not a positive measure
    CHECK_THROWS_AS(stieltjes_invert([](cplx u) { return -std::log(u / (u - 1.0)); }, 0, 1, 2000),
                    std::runtime_error);
}

TEST_CASE("quantize: uniform[0,1] degenerates to the point mass at 1") {
    auto q = quantize(uniform01());
    REQUIRE(q.degenerate);
    REQUIRE(q.atoms.size() == 1);
    CHECK(q.atoms[0].first == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(q.atoms[0].second == doctest::Approx(1.0).epsilon(6e-2));
}

TEST_CASE("quantize: half-density on [0,2] gives the arcsine-type density") {
    auto psi = make_grid_density(0, 2, 4000, [](double) { return 0.5; }, DensityClass::MTilde);
    auto q = quantize(psi, 2000);
    REQUIRE(!q.degenerate);
    // R_psi = sqrt(u/(u-2)) - 1, so the density is (1/pi) sqrt(t/(2-t))
    double sup = 0;
    for (size_t i = 0; i < q.density.t.size(); ++i) {
        const double t = q.density.t[i];
        if (t < 0.1 || t > 1.8) continue;  // wider band at the inverse-sqrt edge
        sup = std::max(sup, std::abs(q.density.v[i] - std::sqrt(t / (2.0 - t)) / M_PI));
    }
    CHECK(sup < 1e-2);
    CHECK(q.density.mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dequantize membership and the wide-class example") {
    // uniform[0,1] in its own class interval is outside the bijection domain
    CHECK_THROWS_AS(dequantize(uniform01()), std::runtime_error);

    // declared on the wider interval [-1,2] it maps to a density bounded by 1
    auto mu = make_grid_density(-1, 2, 3000,
                                [](double t) { return (t >= 0.0 && t <= 1.0) ? 1.0 : 0.0; },
                                DensityClass::M);
    auto psi = dequantize(mu, 1500);
    psi.validate(2e-2);
    double maxv = 0;
    for (double x : psi.v) maxv = std::max(maxv, x);
    CHECK(maxv <= 1.0 + 1e-9);
    // density saturates at 1 just left of 0 (where R_mu < -1 on the real axis)
    CHECK(psi.value_at(-0.2) == doctest::Approx(1.0).epsilon(5e-2));
    CHECK(psi.value_at(-0.9) == doctest::Approx(0.0).epsilon(5e-2));

    // oracle: direct G computation at probes, exp(int dpsi/(u-t)) = 1 + R_mu
    for (double u : {-2.0, 3.5, 4.0}) {
        const cplx lhs = std::exp(cauchy_G(psi, cplx(u, 0.0)));
        const cplx rhs = 1.0 + r_mu(mu, cplx(u, 0.0));
        CHECK(std::abs(lhs - rhs) < 5e-3);
    }
}

TEST_CASE("dequantize of a near-point-mass recovers the uniform density") {
    // grid-limit stand-in for the point mass at 1, class interval [0,1]
    const double width = 0.01;
    auto mu = make_grid_density(0, 1, 4000,
                                [=](double t) { return t >= 1.0 - width ? 1.0 / width : 0.0; },
                                DensityClass::M);
    auto psi = dequantize(mu, 1500);
    double sup = 0;
    for (size_t i = 0; i < psi.t.size(); ++i) {
        if (psi.t[i] < 0.05 || psi.t[i] > 0.93) continue;
        sup = std::max(sup, std::abs(psi.v[i] - 1.0));
    }
    CHECK(sup < 5e-2);
}

TEST_CASE("markov-krein maps: point mass and semicircle") {
    // near-delta at 0.4 on class [0,1]: w approaches |t - 0.4|
    const double width = 0.01;
    auto mu = make_grid_density(0, 1, 4000,
                                [=](double t) { return std::abs(t - 0.4) <= width ? 0.5 / width : 0.0; },
                                DensityClass::M);
    auto w = mk_mu_to_w(mu, 1200);
    CHECK(w.x0 == doctest::Approx(0.4).epsilon(1e-2));
    double sup = 0;
    for (size_t i = 0; i < w.t.size(); ++i)
        sup = std::max(sup, std::abs(w.v[i] - std::abs(w.t[i] - 0.4)));
    CHECK(sup < 5e-2);

    // semicircle <-> VKLS (Kerov's pairing)
    auto sc = semicircle(4000);
    auto omega = vkls_curve(4000);
    auto w2 = mk_mu_to_w(sc, 1500);
    CHECK(sup_distance_interior(w2, omega) < 1e-2);
    auto back = mk_w_to_mu(omega, 1500);
    CHECK(sup_distance_interior(back, sc) < 1e-2);
}

TEST_CASE("quantized maps on the trivial pair") {
    auto [psi, w] = trivial_pair(4000);
    auto w_est = qmk_psi_to_w(psi, 1500);
    double sup = 0;
    for (size_t i = 0; i < w_est.t.size(); ++i)
        sup = std::max(sup, std::abs(w_est.v[i] - w.value_at(w_est.t[i])));
    CHECK(sup < 5e-3);

    auto psi_est = qmk_w_to_psi(w, 1500);
    CHECK(l1_distance(psi_est, psi) < 5e-3);
}

TEST_CASE("qmk moment relation against the series relation") {
    auto psi = plancherel_psi(1.0, 4000);
    auto w = qmk_psi_to_w(psi, 1500);
    std::vector<double> m{1.0};
    for (int k = 1; k <= 4; ++k) m.push_back(psi.moment(k));
    auto d = dmk_m_to_d(m);
    for (int k = 1; k <= 4; ++k)
        CHECK(std::abs(p_k_grid(w, k) - d[k - 1]) < 1e-3);
}

TEST_CASE("membership checks") {
    auto ok = membership_checks(uniform01());
    CHECK(ok.all_ok());

    auto bad = uniform01();
    for (auto& x : bad.v) x = 1.5;
    for (auto& x : bad.v) x /= bad.mass();
    bad.v.front() = 3.0;  // spike over 1
    auto rep = membership_checks(bad);
    CHECK_FALSE(rep.density_bound_ok);

    auto wrep = membership_checks(plancherel_w(1.0, 2000));
    CHECK(wrep.all_ok());
}

TEST_CASE("semiclassical rescaling") {
    auto psi = plancherel_psi(1.0, 2000);
    auto w = plancherel_w(1.0, 2000);
    auto [mu1, w1] = semiclassical_rescale(psi, w, 1.0);
    CHECK(mu1.a == doctest::Approx(psi.a));
    CHECK(w1.x0 == doctest::Approx(w.x0));
    for (size_t i = 0; i < w1.v.size(); ++i) CHECK(w1.v[i] == doctest::Approx(w.v[i]));

    // classical defect |R_mu_hat - R_w_hat| decreases along gamma = 1/eps^2
    auto defect = [](double eps) {
        auto p = plancherel_psi(1.0 / (eps * eps), 3000);
        auto d = plancherel_w(1.0 / (eps * eps), 3000);
        auto [mh, wh] = semiclassical_rescale(p, d, eps);
        double worst = 0;
        for (cplx u : standard_probe_set(mh.a, mh.b))
            worst = std::max(worst, std::abs(r_mu(mh, u) - r_w(wh, u)));
        return worst;
    };
    const double d1 = defect(1.0), d2 = defect(0.5), d3 = defect(0.25);
    CHECK(d2 < d1);
    CHECK(d3 < d2);

    CHECK_THROWS_AS(semiclassical_rescale(psi, vkls_curve(500), 0.5), std::invalid_argument);
}
