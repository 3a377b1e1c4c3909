#include "brouwer/genfun.hpp"

#include <cmath>

namespace brouwer::genfun {

C1Partials c1_partials(const Chart<double>& ch, const PhysicalConstants& c,
                       const TheoryGuards& g) {
    const double x = ch.s2;
    detail::check_critical(x, g);
    const double kappa = x * (15.0 * x - 14.0) / (32.0 * (5.0 * x - 4.0));
    const double dkappa = (75.0 * x * x - 120.0 * x + 56.0)
                          / (32.0 * (5.0 * x - 4.0) * (5.0 * x - 4.0));
    const double rho2 = (c.re / ch.p) * (c.re / ch.p);
    const double s2g = std::sin(2.0 * ch.g), c2g = std::cos(2.0 * ch.g);
    const double e2 = ch.e2;
    C1Partials out;
    out.dg = 2.0 * ch.G * rho2 * kappa * e2 * c2g;
    out.dL = ch.G * rho2 * kappa * (2.0 * ch.G * ch.G / (ch.L * ch.L * ch.L)) * s2g;
    // G rho^2 = re^2 mu^2 / G^3; differentiate the G^-3, s^2(G) and e^2(G) factors
    const double k0 = c.re * c.re * c.mu * c.mu;
    out.dG = k0 * (-3.0 * kappa * e2 / pow_int(ch.G, 4)
                   + dkappa * (2.0 * (1.0 - x) / ch.G) * e2 / pow_int(ch.G, 3)
                   + kappa * (-2.0 * ch.G / (ch.L * ch.L)) / pow_int(ch.G, 3)) * s2g;
    return out;
}

double eval_htilde02_prime(const Chart<double>& ch, const PhysicalConstants& c,
                           const CoefficientTables& tables) {
    const double x = ch.s2;
    const double eta = ch.eta;
    const double h00 = eval_H00(ch, c);
    const double rho4 = pow_int(c.re / ch.p, 4);
    const double ar = ch.a / ch.r;

    double row1 = 0.0;
    for (int i = 0; i <= 2; ++i) {
        const int jlo = (i % 2 == 0) ? i : -i;
        double acc = 0.0;
        for (int j = jlo; j <= i + 4; ++j) {
            const int kmax = 3 - std::abs(2 * i - j);
            double etas = 0.0;
            for (int k = kmax; k >= 0; --k)
                etas = etas * eta + tables.t1_B(i, j, k).eval(x);
            acc += etas * pow_int(ch.e, std::abs(j - 2 * i))
                   * std::cos(j * ch.f + 2 * i * ch.g);
        }
        row1 += pow_int(x, i) * acc;
    }
    row1 *= h00 * rho4 * ar * ar * (3.0 / 64.0) * eta * eta / (1.0 + eta);

    double s2sum = 0.0;
    for (int j = 1; j <= 3; ++j) {
        const int js = j % 2;
        s2sum += (2.0 - js) / j * pow_int(ch.e, js) * std::cos(j * ch.f + 2.0 * ch.g);
    }
    const double row2 = h00 * rho4 * (3.0 / 8.0) * eta
                        * (eta * pow_int(3.0 * x - 2.0, 2) + 3.0 * (5.0 * x - 4.0) * x * s2sum);

    double s3sum = 0.0;
    for (int j = 1; j <= 3; ++j) {
        const int js = j % 2;
        s3sum += (2.0 - js) * pow_int(ch.e, js) * std::sin(j * ch.f + 2.0 * ch.g);
    }
    const double pr = ch.p / ch.r;
    const double row3 = h00 * rho4 * (9.0 / 8.0) * (5.0 * x - 4.0) * x
                        * pr * pr * ch.phi / (eta * eta) * s3sum;
    return row1 + row2 + row3;
}

double eval_htilde02_star(const Chart<double>& ch, const PhysicalConstants& c,
                          const C1Partials& dc1, const CoefficientTables& tables) {
    const double x = ch.s2;
    const double eta = ch.eta;
    const double h00 = eval_H00(ch, c);
    const double rho2 = pow_int(c.re / ch.p, 2);
    const double a2er2 = (ch.a / ch.r) * (ch.a / ch.r) * eta;

    // row 1: dC1/dg series
    double s1 = 0.0;
    for (int i = 0; i <= 1; ++i) {
        for (int j = -i; j <= 2 * i + 3; ++j) {
            const int js = std::abs(j) % 2;
            double etas = 0.0;
            for (int k = js; k >= 0; --k)
                etas = etas * (eta * eta) + tables.t2_b(i, j, k).eval(x);
            const int jp = (std::abs(j - 2 * i) - 2) * js;
            s1 += etas * pow_int(ch.e, jp) * std::cos(j * ch.f + 2 * i * ch.g);
        }
    }
    const double row1 = h00 * rho2 / ch.L * dc1.dg * 1.5 * (4.0 - 5.0 * x + a2er2 * s1);

    // row 2: dC1/dG series
    double s2 = 0.0;
    for (int j = 1; j <= 3; ++j) {
        const int js = j % 2;
        const int jp1s = (j + 1) % 2;
        s2 += (1.0 + jp1s) * pow_int(ch.e, js) * std::sin(j * ch.f + 2.0 * ch.g);
    }
    const double row2 = -h00 * rho2 * dc1.dG * 1.5 * eta * x * a2er2 * s2;

    // row 3: dC1/dL series; leading inclination factors fixed by the
    // bracket oracle (the printed display leaves them implicit)
    const double b0 = 6.0 * x - 4.0;
    const double b1 = x;
    double s3 = 0.0;
    for (int i = 0; i <= 1; ++i) {
        const double bi = i == 0 ? b0 : b1;
        for (int j = -i; j <= 2 * i + 3; ++j) {
            const int js = std::abs(j) % 2;
            const TablePoly& q = tables.t2_q(i, j);
            if (q.num_len == 0) continue;
            s3 += bi * q.eval(ch.e2) * pow_int(ch.e, js) * std::sin(j * ch.f + 2 * i * ch.g);
        }
    }
    const double row3 = h00 * rho2 * dc1.dL * 3.0 / (16.0 * eta * eta) * a2er2 * s3;
    return row1 + row2 + row3;
}

double htilde02_prime_avg(const Chart<double>& ch, const PhysicalConstants& c) {
    const double x = ch.s2;
    const double eta = ch.eta;
    const double h00 = eval_H00(ch, c);
    const double rho4 = pow_int(c.re / ch.p, 4);
    const double main = h00 * rho4 * (3.0 / 32.0) * eta
                        * (5.0 * (7.0 * x * x - 16.0 * x + 8.0)
                           + eta * pow_int(6.0 * x - 4.0, 2)
                           + eta * eta * (5.0 * x * x + 8.0 * x - 8.0));
    const double gterm = h00 * rho4 * (3.0 / 16.0) * eta * (15.0 * x - 14.0) * x
                         * ch.e2 * std::cos(2.0 * ch.g);
    return main + gterm;
}

double htilde02_star_avg(const Chart<double>& ch, const PhysicalConstants& c,
                         const C1Partials& dc1) {
    const double x = ch.s2;
    return -eval_H00(ch, c) * pow_int(c.re / ch.p, 2) * 3.0 * (5.0 * x - 4.0)
           * dc1.dg / ch.L;
}

double htilde03_prime_avg(const Chart<double>& ch, const PhysicalConstants& c,
                          const TheoryGuards& g, const CoefficientTables& tables) {
    const double x = ch.s2;
    detail::check_critical(x, g);
    const double eta = ch.eta;
    double tot = 0.0;
    for (int i = 0; i <= 2; ++i) {
        const int is = i % 2;
        double etas = 0.0;
        for (int k = 4 - 2 * i + is; k >= 0; --k)
            etas = etas * eta + tables.t4_beta(i, k).eval(x);
        const double den = pow_int(5.0 * x - 4.0, 2 - is) * pow_int(1.0 + eta, is);
        tot += etas * pow_int(x, i) * pow_int(ch.e2, i) * std::cos(2.0 * i * ch.g) / den;
    }
    return eval_H00(ch, c) * pow_int(c.re / ch.p, 6) * (9.0 / 512.0) * eta * tot;
}

double htilde03_star_avg(const Chart<double>& ch, const PhysicalConstants& c,
                         const TheoryGuards& g, const CoefficientTables& tables) {
    const double x = ch.s2;
    detail::check_critical(x, g);
    const double eta = ch.eta;
    // dC2/dg in closed form
    double dg = 0.0;
    for (int i = 1; i <= 2; ++i) {
        const int is = i % 2;
        double etas = 0.0;
        for (int k = 4 - 2 * i + is; k >= 0; --k)
            etas = etas * eta + tables.t4_beta(i, k).eval(x);
        const double den = pow_int(5.0 * x - 4.0, i + 1) * pow_int(1.0 + eta, is);
        dg += etas * pow_int(x, i) * pow_int(ch.e2, i) * std::cos(2.0 * i * ch.g) / den;
    }
    dg *= ch.G * pow_int(c.re / ch.p, 4) / 256.0;
    return -eval_H00(ch, c) * pow_int(c.re / ch.p, 2) * (9.0 / 2.0) * (5.0 * x - 4.0)
           * dg / ch.L;
}

double kozai_average(int m, double alpha, double e) {
    if (m < 0) throw std::domain_error("kozai_average: m must be >= 0");
    if (!(e >= 0.0 && e < 1.0)) throw std::domain_error("kozai_average: e must be in [0,1)");
    const double eta = std::sqrt(1.0 - e * e);
    return pow_int(-e / (1.0 + eta), m) * (1.0 + m * eta) * std::cos(alpha);
}

double ibp_average(int m, double alpha, double e) {
    if (m < 1) throw std::domain_error("ibp_average: m must be >= 1");
    if (!(e >= 0.0 && e < 1.0)) throw std::domain_error("ibp_average: e must be in [0,1)");
    const double eta = std::sqrt(1.0 - e * e);
    return -(pow_int(eta, 3) / m) * pow_int(-e / (1.0 + eta), m) * (1.0 + m * eta)
           * std::cos(alpha);
}

}  // namespace brouwer::genfun
