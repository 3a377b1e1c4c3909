#include "brouwer/hamiltonian.hpp"

#include <cmath>

namespace brouwer {

double eval_osculating_hamiltonian(const DelaunayState& d, const PhysicalConstants& c) {
    const auto ch = make_chart(d, c);
    return eval_H00(ch, c) + c.j2 * eval_H10(ch, c);
}

double hamiltonian_from_cartesian(const CartesianState& s, const PhysicalConstants& c) {
    const auto& x = s.position;
    const auto& v = s.velocity;
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const double r = std::sqrt(r2);
    const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    const double u = x[2] / r;
    const double pot = -(c.mu / r)
        * (1.0 - c.j2 * (c.re / r) * (c.re / r) * (3.0 * u * u - 1.0) / 2.0);
    return 0.5 * v2 + pot;
}

double secular_hamiltonian(int order, double L, double G, double H,
                           const PhysicalConstants& c, const TheoryGuards& guards,
                           const CoefficientTables& tables) {
    if (order < 0 || order > 3)
        throw std::domain_error("secular_hamiltonian: order must be in [0,3]");
    double tot = -c.mu * c.mu / (2.0 * L * L);
    static constexpr double kFact[4] = {1.0, 1.0, 2.0, 6.0};
    double j2m = 1.0;
    for (int m = 1; m <= order; ++m) {
        j2m *= c.j2;
        tot += j2m / kFact[m] * eval_secular_term(m, L, G, H, c, guards, tables);
    }
    return tot;
}

SecularGradient secular_term_gradient(int m, double L, double G, double H,
                                      const PhysicalConstants& c,
                                      const TheoryGuards& guards,
                                      const CoefficientTables& tables) {
    const double h00 = -c.mu * c.mu / (2.0 * L * L);
    const double dh00 = -2.0 * h00 / L;
    const double rho = c.re * c.mu / (G * G);
    const double eta = G / L;
    const double x = 1.0 - (H / G) * (H / G);
    const double dx_dG = 2.0 * (1.0 - x) / G;
    const double dx_dH = -2.0 * H / (G * G);
    SecularGradient out;
    if (m == 1) {
        const double r2 = rho * rho;
        const double b0 = 1.0 - 1.5 * x;
        const double v = h00 * r2 * eta * b0;
        out.dL = -3.0 * v / L;
        out.dG = h00 * (r2 * (-4.0 / G) * eta * b0 + r2 * (1.0 / L) * b0
                        + r2 * eta * (-1.5) * dx_dG);
        out.dH = h00 * r2 * eta * (-1.5) * dx_dH;
    } else if (m == 2) {
        const double r4 = pow_int(rho, 4);
        const double p1 = 5.0 * (7.0 * x * x - 16.0 * x + 8.0);
        const double p2 = (6.0 * x - 4.0) * (6.0 * x - 4.0);
        const double p3 = 5.0 * x * x + 8.0 * x - 8.0;
        const double dp1 = 5.0 * (14.0 * x - 16.0);
        const double dp2 = 24.0 * (3.0 * x - 2.0);
        const double dp3 = 10.0 * x + 8.0;
        const double S = eta * (p1 + eta * p2 + eta * eta * p3);
        const double S_eta = p1 + 2.0 * eta * p2 + 3.0 * eta * eta * p3;
        const double S_x = eta * (dp1 + eta * dp2 + eta * eta * dp3);
        const double k = 3.0 / 32.0;
        out.dL = k * r4 * (dh00 * S + h00 * S_eta * (-eta / L));
        out.dG = k * (h00 * (-8.0 / G) * r4 * S
                      + h00 * r4 * (S_eta / L + S_x * dx_dG));
        out.dH = k * h00 * r4 * S_x * dx_dH;
    } else if (m == 3) {
        const double band = 5.0 * x - 4.0;
        if (std::abs(band) < guards.critical_inclination_band)
            throw CriticalInclinationError(band);
        const double r6 = pow_int(rho, 6);
        double tpe = 0.0;   // sum beta_{0,k} eta^{k+1}
        double tpe_eta = 0.0;
        double tpe_x = 0.0;
        for (int k = 0; k <= 4; ++k) {
            const TablePoly& b = tables.t4_beta(0, k);
            const double bv = b.eval(x);
            double bd = 0.0;
            for (int n = 1; n < b.num_len; ++n) bd += n * b.num[n] * pow_int(x, n - 1);
            tpe += bv * pow_int(eta, k + 1);
            tpe_eta += (k + 1) * bv * pow_int(eta, k);
            tpe_x += bd * pow_int(eta, k + 1);
        }
        const double D = band * band;
        const double dD = 10.0 * band;
        const double k9 = 9.0 / 512.0;
        out.dL = k9 * r6 / D * (dh00 * tpe + h00 * tpe_eta * (-eta / L));
        out.dG = k9 * h00 * r6 * (-12.0 * tpe / (G * D) + tpe_eta / (L * D)
                                  + (tpe_x - tpe * dD / D) * dx_dG / D);
        out.dH = k9 * h00 * r6 * (tpe_x - tpe * dD / D) * dx_dH / D;
    } else {
        throw std::domain_error("secular_term_gradient: m must be 1, 2 or 3");
    }
    return out;
}

SecularFrequencies secular_frequencies(double Lhat, double L, double G, double H,
                                       int order, const PhysicalConstants& c,
                                       const TheoryGuards& guards,
                                       const CoefficientTables& tables) {
    if (order < 0 || order > 3)
        throw std::domain_error("secular_frequencies: order must be in [0,3]");
    SecularFrequencies f;
    f.n_l = c.mu * c.mu / (Lhat * Lhat * Lhat);
    static constexpr double kFact[4] = {1.0, 1.0, 2.0, 6.0};
    double j2m = 1.0;
    for (int m = 1; m <= order; ++m) {
        j2m *= c.j2;
        const auto g = secular_term_gradient(m, L, G, H, c, guards, tables);
        f.n_l += j2m / kFact[m] * g.dL;
        f.n_g += j2m / kFact[m] * g.dG;
        f.n_h += j2m / kFact[m] * g.dH;
    }
    return f;
}

}  // namespace brouwer
