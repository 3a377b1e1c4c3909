#include "brouwer/elements.hpp"

#include <cmath>

#include "brouwer/angles.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace brouwer;
using brouwer::testing::rel_err;
using brouwer::testing::StateSampler;

TEST_CASE("solve_kepler basic cases") {
    CHECK(solve_kepler(0.0, 0.3) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(solve_kepler(1.234, 0.0) == doctest::Approx(1.234).epsilon(1e-15));
    // frozen bisection-oracle value
    CHECK(rel_err(solve_kepler(1.0, 0.1), 1.0885977523978936185) < 1e-14);
    CHECK_THROWS_AS(solve_kepler(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(solve_kepler(1.0, -0.1), std::domain_error);
}

TEST_CASE("kepler residual over random (l,e), e <= 0.9") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> ul(0.0, two_pi), ue(0.0, 0.9);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double l = ul(rng), e = ue(rng);
        const double E = solve_kepler(l, e);
        worst = std::max(worst, std::abs(E - e * std::sin(E) - wrap_pi(l) - (l - wrap_pi(l))));
    }
    CHECK(worst <= 1e-13);  // 1e-14 on the residual after angle reduction
    // residual check in the solver's own reduced frame
    worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double l = ul(rng), e = ue(rng);
        const double E = solve_kepler(l, e);
        worst = std::max(worst, std::abs(E - e * std::sin(E) - l));
    }
    CHECK(worst <= 1e-14 * 10.0);
}

TEST_CASE("anomalies_from_mean") {
    SUBCASE("apoapsis symmetry") {
        const auto an = anomalies_from_mean(std::numbers::pi, 8000.0, 0.3);
        CHECK(rel_err(an.f, std::numbers::pi) < 1e-14);
        CHECK(std::abs(an.phi) < 1e-14);
        CHECK(rel_err(an.r, 8000.0 * 1.3) < 1e-14);
    }
    SUBCASE("circular") {
        const auto an = anomalies_from_mean(1.0, 8000.0, 0.0);
        CHECK(rel_err(an.f, 1.0) < 1e-15);
        CHECK(std::abs(an.phi) < 1e-15);
        CHECK(rel_err(an.r, 8000.0) < 1e-15);
    }
    SUBCASE("frozen chain l=1, a=7707.27, e=0.1") {
        const auto an = anomalies_from_mean(1.0, 7707.27, 0.1);
        CHECK(rel_err(an.E, 1.0885977523978936185) < 1e-14);
        CHECK(rel_err(an.f, 1.1794692626997686973) < 1e-14);
        CHECK(rel_err(an.r, 7349.8621692862636823) < 1e-14);
        CHECK(rel_err(an.phi, 0.1794692626997686973) < 1e-13);
    }
    SUBCASE("phi odd about l = 0 and l = pi") {
        for (double l : {0.3, 1.1, 2.9}) {
            const auto a1 = anomalies_from_mean(l, 9000.0, 0.4);
            const auto a2 = anomalies_from_mean(two_pi - l, 9000.0, 0.4);
            CHECK(std::abs(a1.phi + a2.phi) < 1e-13);
        }
    }
}

TEST_CASE("delaunay from keplerian and back") {
    PhysicalConstants c;
    SUBCASE("unit circular equatorial with mu = 1") {
        PhysicalConstants unit{};
        unit.mu = 1.0;
        unit.re = 1.0;
        KeplerianSet k{1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
        const auto d = delaunay_from_keplerian(k, unit);
        CHECK(d.L == doctest::Approx(1.0));
        CHECK(d.G == doctest::Approx(1.0));
        CHECK(d.H == doctest::Approx(1.0));
    }
    SUBCASE("Topex set") {
        KeplerianSet k{7707.270, 1.0e-4, deg2rad(66.04), deg2rad(180.001),
                       deg2rad(270.0), deg2rad(180.0)};
        const auto d = delaunay_from_keplerian(k, c);
        CHECK(rel_err(d.L, std::sqrt(c.mu * 7707.270)) < 1e-15);
        CHECK(rel_err(d.G, d.L * std::sqrt(1.0 - 1e-8)) < 1e-15);
        CHECK(rel_err(d.H, d.G * std::cos(deg2rad(66.04))) < 1e-15);
    }
    SUBCASE("round trip on random sets") {
        StateSampler smp(7);
        for (int i = 0; i < 200; ++i) {
            const auto d = smp.next();
            const auto k = keplerian_from_delaunay(d, c);
            const auto d2 = delaunay_from_keplerian(k, c);
            CHECK(rel_err(d2.L, d.L) < 1e-12);
            CHECK(rel_err(d2.G, d.G) < 1e-12);
            CHECK(rel_err(d2.H, d.H) < 1e-12);
            CHECK(std::abs(wrap_pi(d2.l - d.l)) < 1e-12);
        }
    }
    SUBCASE("invalid input") {
        KeplerianSet bad{-1.0, 0.1, 0.3, 0.0, 0.0, 0.0};
        CHECK_THROWS_AS(delaunay_from_keplerian(bad, c), std::domain_error);
    }
}

TEST_CASE("polar nodal chart") {
    PhysicalConstants c;
    SUBCASE("circular: R = 0, r = a, theta = l + g") {
        KeplerianSet k{8000.0, 0.0, 0.7, 0.2, 0.4, 1.1};
        const auto d = delaunay_from_keplerian(k, c);
        const auto p = polar_nodal_from_delaunay(d, c);
        CHECK(std::abs(p.R) < 1e-12);
        CHECK(rel_err(p.r, 8000.0) < 1e-14);
        CHECK(std::abs(wrap_pi(p.theta - (1.1 + 0.4))) < 1e-12);
    }
    SUBCASE("periapsis: R = 0, r = a(1-e)") {
        KeplerianSet k{8000.0, 0.25, 0.7, 0.2, 0.4, 0.0};
        const auto d = delaunay_from_keplerian(k, c);
        const auto p = polar_nodal_from_delaunay(d, c);
        CHECK(std::abs(p.R) < 1e-12);
        CHECK(rel_err(p.r, 8000.0 * 0.75) < 1e-14);
    }
    SUBCASE("|r x v| = Theta and N through the Cartesian pipeline") {
        StateSampler smp(11);
        for (int i = 0; i < 100; ++i) {
            const auto d = smp.next();
            const auto p = polar_nodal_from_delaunay(d, c);
            const auto s = cartesian_from_polar_nodal(p);
            const auto& x = s.position;
            const auto& v = s.velocity;
            const Vec3 am{x[1] * v[2] - x[2] * v[1], x[2] * v[0] - x[0] * v[2],
                          x[0] * v[1] - x[1] * v[0]};
            const double th = std::sqrt(am[0] * am[0] + am[1] * am[1] + am[2] * am[2]);
            CHECK(rel_err(th, d.G) < 1e-12);
            CHECK(rel_err(am[2], d.H) < 1e-11);
            const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            CHECK(rel_err(r, p.r) < 1e-12);
        }
    }
    SUBCASE("two-body energy from the full chain") {
        StateSampler smp(13);
        for (int i = 0; i < 100; ++i) {
            const auto d = smp.next();
            const auto s = cartesian_from_delaunay(d, c);
            const auto& x = s.position;
            const auto& v = s.velocity;
            const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            CHECK(rel_err(0.5 * v2 - c.mu / r, -c.mu * c.mu / (2.0 * d.L * d.L)) < 1e-12);
        }
    }
    SUBCASE("equatorial prograde stays in the xy-plane") {
        PolarNodalState p{8000.0, 0.3, 0.1, 0.0, 60000.0, 60000.0};
        const auto s = cartesian_from_polar_nodal(p);
        CHECK(std::abs(s.position[2]) < 1e-9);
        CHECK(std::abs(s.velocity[2]) < 1e-12);
    }
    SUBCASE("|N| > Theta rejected") {
        PolarNodalState p{8000.0, 0.3, 0.1, 0.0, 60000.0, 60001.0};
        CHECK_THROWS_AS(cartesian_from_polar_nodal(p), std::domain_error);
    }
}

TEST_CASE("full chart round trips") {
    PhysicalConstants c;
    StateSampler smp(17);
    for (int i = 0; i < 200; ++i) {
        const auto d = smp.next();
        const auto p = polar_nodal_from_delaunay(d, c);
        const auto d2 = delaunay_from_polar_nodal(p, c);
        CHECK(rel_err(d2.L, d.L) < 1e-11);
        CHECK(rel_err(d2.G, d.G) < 1e-11);
        CHECK(std::abs(wrap_pi(d2.l - d.l)) < 1e-10);
        CHECK(std::abs(wrap_pi(d2.g - d.g)) < 1e-10);

        const auto s = cartesian_from_polar_nodal(p);
        const auto p2 = polar_nodal_from_cartesian(s);
        CHECK(rel_err(p2.r, p.r) < 1e-11);
        CHECK(rel_err(p2.Theta, p.Theta) < 1e-11);
        CHECK(rel_err(p2.N, p.N) < 1e-10);
        CHECK(std::abs(wrap_pi(p2.theta - p.theta)) < 1e-10);
        CHECK(std::abs(wrap_pi(p2.nu - p.nu)) < 1e-10);
    }
}

TEST_CASE("conic identity r = p / (1 + e cos f)") {
    StateSampler smp(23);
    PhysicalConstants c;
    for (int i = 0; i < 100; ++i) {
        const auto d = smp.next();
        const auto k = keplerian_from_delaunay(d, c);
        const auto an = anomalies_from_mean(d.l, k.a, k.e);
        const double p = k.a * (1.0 - k.e * k.e);
        CHECK(rel_err(an.r, p / (1.0 + k.e * std::cos(an.f))) < 1e-13);
    }
}
