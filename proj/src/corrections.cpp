#include "brouwer/corrections.hpp"

#include <cmath>

#include "brouwer/genfun.hpp"

namespace brouwer {

std::array<Jet2, 6> polar_nodal_jets(const Chart<Jet2>& ch, const PhysicalConstants& c) {
    return {ch.r,
            ch.f + ch.g,
            ch.h,
            (c.mu / ch.G) * ch.e * sin(ch.f),
            ch.G,
            ch.H};
}

namespace {

/// shared engine: sign = +1 direct, -1 inverse
std::array<double, 6> corrected_polar_nodal(const DelaunayState& d, int order, double sign,
                                            const PhysicalConstants& c,
                                            const TheoryGuards& guards,
                                            const CoefficientTables& tables) {
    if (order < 0 || order > 2)
        throw std::domain_error("periodic corrections: order must be 0, 1 or 2");
    std::array<double, 6> out{};
    if (order == 0) {
        const auto p = polar_nodal_from_delaunay(d, c);
        return {p.r, p.theta, p.nu, p.R, p.Theta, p.N};
    }
    const Chart<Jet2> ch = make_jet_chart(d, c, guards.eccentricity_floor);
    const auto xi = polar_nodal_jets(ch, c);
    const Jet2 w1 = genfun::eval_W1(ch, c, guards);
    Jet2 w2;
    if (order >= 2) w2 = genfun::eval_W2(ch, c, guards, tables);
    const double j2 = c.j2;
    for (int k = 0; k < 6; ++k) {
        double v = xi[k].v;
        const Jet2 delta = poisson_bracket_jet(xi[k], w1);
        v += sign * j2 * delta.v;
        if (order >= 2) {
            const double d2 = poisson_bracket_value(delta, w1)
                              + sign * poisson_bracket_value(xi[k], w2);
            v += 0.5 * j2 * j2 * d2;
        }
        out[k] = v;
    }
    return out;
}

}  // namespace

PolarNodalState mean_to_osculating(const DelaunayState& mean, int order,
                                   const PhysicalConstants& c, const TheoryGuards& guards,
                                   const CoefficientTables& tables) {
    const auto v = corrected_polar_nodal(mean, order, +1.0, c, guards, tables);
    PolarNodalState p{v[0], v[1], v[2], v[3], v[4], v[5]};
    p.validate();
    return p;
}

DelaunayState osculating_to_mean(const DelaunayState& osc, int order,
                                 const PhysicalConstants& c, const TheoryGuards& guards,
                                 const CoefficientTables& tables) {
    const auto v = corrected_polar_nodal(osc, order, -1.0, c, guards, tables);
    PolarNodalState p{v[0], v[1], v[2], v[3], v[4], v[5]};
    p.validate();
    return delaunay_from_polar_nodal(p, c);
}

double delta_a_first(const Chart<double>& ch, const PhysicalConstants& c) {
    const double x = ch.s2;
    const double eta = ch.eta;
    const double eta2 = eta * eta;
    const double b[2] = {incl_B0(x), incl_B1(x)};
    // A_{i,j}(eta); the bracket oracle fixes A_{1,2} = 20 - 12 eta^2,
    // absent from the printed alias list
    const double A01 = 15.0 - 3.0 * eta2;
    const double A02 = 6.0, A03 = 1.0;
    auto A = [&](int i, int j) -> double {
        if (i == 0) {
            switch (j) {
                case 0: return 10.0 - 6.0 * eta2 - 4.0 * eta2 * eta;
                case 1: return A01;
                case 2: return A02;
                case 3: return A03;
                default: return 0.0;
            }
        }
        switch (j) {
            case -1: return 1.0;
            case 0: return 6.0;
            case 1: return A01;
            case 2: return 20.0 - 12.0 * eta2;
            case 3: return A01;
            case 4: return A02;
            case 5: return A03;
            default: return 0.0;
        }
    };
    double tot = 0.0;
    for (int i = 0; i <= 1; ++i)
        for (int j = -i; j <= 3 + 2 * i; ++j)
            tot += b[i] * A(i, j) * pow_int(ch.e, std::abs(j - 2 * i))
                   * std::cos(j * ch.f + 2 * i * ch.g);
    return ch.a * pow_int(c.re / ch.p, 2) / (4.0 * eta2) * tot;
}

double delta_a_second_inverse(const Chart<double>& ch, const PhysicalConstants& c,
                              const CoefficientTables& tables) {
    const double x = ch.s2;
    const double eta = ch.eta;
    if (std::abs(3.0 * x - 2.0) < 1e-9)
        throw std::domain_error("delta_a_second_inverse: 3 s^2 - 2 divisor vanishes");
    double tot = 24.0 * pow_int(eta, 7) * (5.0 * x * x + 8.0 * x - 8.0)
                 + 48.0 * pow_int(eta, 5) * (15.0 * x - 14.0) * x * ch.e2
                       * std::cos(2.0 * ch.g);
    for (int i = 0; i <= 2; ++i) {
        const int is = i % 2;
        const double lead = pow_int(3.0 * x - 2.0, is) * pow_int(x, i);
        for (int j = -i - 3 * is; j <= 6 + 2 * i; ++j) {
            const int kmax = 6 - std::abs(j - 2 * i);
            double etas = 0.0;
            for (int k = kmax; k >= 0; --k)
                etas = etas * eta + tables.t5_A(i, j, k).eval(x);
            tot += lead * etas * pow_int(ch.e, std::abs(j - 2 * i))
                   * std::cos(j * ch.f + 2 * i * ch.g);
        }
    }
    return ch.a * pow_int(c.re / ch.p, 4) / (256.0 * pow_int(eta, 4)) * tot;
}

}  // namespace brouwer
