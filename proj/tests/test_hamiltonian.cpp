#include "brouwer/hamiltonian.hpp"

#include <cmath>

#include "brouwer/angles.hpp"
#include "brouwer/checks.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace brouwer;
using brouwer::testing::rel_err;
using brouwer::testing::StateSampler;

namespace {
DelaunayState topex_osc(const PhysicalConstants& c) {
    KeplerianSet k{7707.270, 1.0e-4, deg2rad(66.04), deg2rad(180.001), deg2rad(270.0),
                   deg2rad(180.0)};
    return delaunay_from_keplerian(k, c);
}
}  // namespace

TEST_CASE("osculating hamiltonian limits") {
    PhysicalConstants c;
    SUBCASE("J2 = 0 gives the Keplerian energy") {
        PhysicalConstants c0 = c;
        c0.j2 = 0.0;
        StateSampler smp(3);
        for (int i = 0; i < 20; ++i) {
            const auto d = smp.next();
            CHECK(rel_err(eval_osculating_hamiltonian(d, c0),
                          -c0.mu * c0.mu / (2.0 * d.L * d.L)) < 1e-15);
        }
    }
    SUBCASE("null configuration: s^2 = 2/3 and f + g = pi/4") {
        // at l = 0 the true anomaly is 0, so set g = pi/4
        PhysicalConstants cc = c;
        DelaunayState d{};
        d.l = 0.0;
        d.g = std::numbers::pi / 4.0;
        d.h = 1.0;
        const double a = 8000.0, e = 0.1;
        d.L = std::sqrt(cc.mu * a);
        d.G = d.L * std::sqrt(1 - e * e);
        d.H = d.G * std::sqrt(1.0 / 3.0);  // cos^2 I = 1/3 -> s^2 = 2/3
        const double r = a * (1 - e);
        CHECK(rel_err(eval_osculating_hamiltonian(d, cc), -cc.mu / (2 * a)
                      + (cc.mu / r) * (cc.re / r) * (cc.re / r) * 0.5 * (-cc.j2)
                            * (1.0 - 1.0)) < 1e-12);
        // the oblateness term collapses: B0 + 2 B1 cos(pi/2) = 0 at s^2 = 2/3
        CHECK(rel_err(eval_osculating_hamiltonian(d, cc), -cc.mu / (2 * a)) < 1e-12);
    }
    SUBCASE("Topex epoch energy against the Cartesian potential route") {
        const auto d = topex_osc(c);
        const double e1 = eval_osculating_hamiltonian(d, c);
        const double e2 = hamiltonian_from_cartesian(cartesian_from_delaunay(d, c), c);
        CHECK(rel_err(e1, e2) < 1e-12);
        // frozen high-precision value
        CHECK(rel_err(e1, -25.829880527345875584) < 1e-13);
    }
    SUBCASE("potential route agrees at random states") {
        StateSampler smp(5);
        for (int i = 0; i < 50; ++i) {
            const auto d = smp.next();
            const double e1 = eval_osculating_hamiltonian(d, c);
            const double e2 = hamiltonian_from_cartesian(cartesian_from_delaunay(d, c), c);
            CHECK(rel_err(e1, e2) < 1e-12);
        }
    }
}

TEST_CASE("secular terms") {
    PhysicalConstants c;
    TheoryGuards g;
    SUBCASE("H01 vanishes at s^2 = 2/3") {
        const double L = 55000.0, G = 54000.0;
        const double H = G * std::sqrt(1.0 / 3.0);
        CHECK(std::abs(eval_secular_term<double>(1, L, G, H, c)) < 1e-9);
    }
    SUBCASE("H01 equals the quadrature average of H10") {
        // covered against Gauss-Legendre quadrature in the identity suite;
        // assert here on a single fixed state for direct visibility
        StateSampler smp(7);
        DelaunayState d = smp.next();
        const auto quad = checks::gauss_legendre(256, 0.0, two_pi);
        double acc = 0.0;
        for (const auto& [x, w] : quad) {
            d.l = x;
            acc += w * eval_H10(make_chart(d, c), c);
        }
        acc /= two_pi;
        CHECK(rel_err(acc, eval_secular_term<double>(1, d.L, d.G, d.H, c)) < 1e-12);
    }
    SUBCASE("secular hamiltonian assembles orders") {
        const double L = 55000.0, G = 54000.0, H = 30000.0;
        const double k0 = secular_hamiltonian(0, L, G, H, c);
        CHECK(rel_err(k0, -c.mu * c.mu / (2 * L * L)) < 1e-15);
        const double k2 = secular_hamiltonian(2, L, G, H, c);
        const double k3 = secular_hamiltonian(3, L, G, H, c);
        const double h03 = eval_secular_term<double>(3, L, G, H, c);
        CHECK(rel_err(k3, k2 + c.j2 * c.j2 * c.j2 / 6.0 * h03) < 1e-14);
    }
    SUBCASE("critical inclination guard for m = 3") {
        const double L = 55000.0, G = 54000.0;
        const double H = G * std::sqrt(1.0 - 0.8);  // s^2 = 0.8 exactly
        CHECK_THROWS_AS(eval_secular_term<double>(3, L, G, H, c, g), CriticalInclinationError);
        CHECK_THROWS_AS(secular_term_gradient(3, L, G, H, c, g), CriticalInclinationError);
    }
}

TEST_CASE("secular frequencies") {
    PhysicalConstants c;
    SUBCASE("J2 = 0 leaves only the Keplerian mean motion") {
        PhysicalConstants c0 = c;
        c0.j2 = 0.0;
        const auto f = secular_frequencies(55000.0, 55000.0, 54000.0, 30000.0, 3, c0);
        CHECK(rel_err(f.n_l, c0.mu * c0.mu / std::pow(55000.0, 3)) < 1e-15);
        CHECK(f.n_g == 0.0);
        CHECK(f.n_h == 0.0);
    }
    SUBCASE("first-order perigee rate vanishes at cos^2 I = 1/5") {
        const double L = 55000.0, G = 54200.0;
        const double H = G / std::sqrt(5.0);
        const auto f = secular_frequencies(L, L, G, H, 1, c);
        // scale: the same derivative at a generic inclination
        const auto fs = secular_frequencies(L, L, G, 0.5 * G, 1, c);
        CHECK(std::abs(f.n_g) < 1e-12 * std::abs(fs.n_g));
        // root confirmed by sign change
        const auto fm = secular_frequencies(L, L, G, H * (1 - 1e-3), 1, c);
        const auto fp = secular_frequencies(L, L, G, H * (1 + 1e-3), 1, c);
        CHECK(fm.n_g * fp.n_g < 0.0);
    }
    SUBCASE("closed-form gradients equal jet gradients") {
        PhysicalConstants cc;
        TheoryGuards g;
        StateSampler smp(11);
        for (int i = 0; i < 40; ++i) {
            const auto d = smp.next();
            const auto ch = make_jet_chart(d, cc, g.eccentricity_floor);
            for (int m = 1; m <= 2; ++m) {
                const Jet2 h = eval_secular_term<Jet2>(m, ch.L, ch.G, ch.H, cc, g);
                const auto gr = secular_term_gradient(m, d.L, d.G, d.H, cc, g);
                const double scale =
                    std::abs(h.d[3]) + std::abs(h.d[4]) + std::abs(h.d[5]) + 1e-30;
                CHECK(std::abs(gr.dL - h.d[3]) / scale < 1e-12);
                CHECK(std::abs(gr.dG - h.d[4]) / scale < 1e-12);
                CHECK(std::abs(gr.dH - h.d[5]) / scale < 1e-12);
            }
        }
    }
}
