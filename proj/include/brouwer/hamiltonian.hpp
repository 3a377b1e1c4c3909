#pragma once

#include "brouwer/constants.hpp"
#include "brouwer/jets.hpp"
#include "brouwer/tables.hpp"

namespace brouwer {

/// Inclination factors of the oblateness disturbing term.
template <class T>
T incl_B0(const T& s2) { return 1.0 - 1.5 * s2; }
template <class T>
T incl_B1(const T& s2) { return 0.75 * s2; }

/// Keplerian term -mu^2 / (2 L^2).
template <class T>
T eval_H00(const Chart<T>& ch, const PhysicalConstants& c) {
    return (-c.mu * c.mu / 2.0) / (ch.L * ch.L);
}

/// Oblateness term of the osculating Hamiltonian with J2 factored out:
/// the full Hamiltonian is H00 + J2 * H10.
template <class T>
T eval_H10(const Chart<T>& ch, const PhysicalConstants& c) {
    using std::cos;
    const T s2 = ch.s2;
    return -(c.mu / ch.r) * (c.re / ch.r) * (c.re / ch.r) * 0.5
           * (1.0 - 1.5 * s2 + 1.5 * s2 * cos(2.0 * (ch.f + ch.g)));
}

/// Osculating main-problem Hamiltonian at a Delaunay state [km^2/s^2].
double eval_osculating_hamiltonian(const DelaunayState& d, const PhysicalConstants& c);

/// Same energy evaluated from a Cartesian state (potential route).
double hamiltonian_from_cartesian(const CartesianState& s, const PhysicalConstants& c);

/// Completely reduced secular term H0m(L, G, H) for m = 1, 2, 3 [km^2/s^2]
/// (the J2^m/m! factors are applied by secular_hamiltonian).
/// m = 3 requires |5 s^2 - 4| outside the critical-inclination band.
template <class T>
T eval_secular_term(int m, const T& L, const T& G, const T& H,
                    const PhysicalConstants& c,
                    const TheoryGuards& guards = {},
                    const CoefficientTables& tables = CoefficientTables::builtin());

/// -mu^2/(2 L^2) + sum_{m<=k} (J2^m / m!) H0m.
double secular_hamiltonian(int order, double L, double G, double H,
                           const PhysicalConstants& c, const TheoryGuards& guards = {},
                           const CoefficientTables& tables = CoefficientTables::builtin());

struct SecularGradient {
    double dL = 0.0, dG = 0.0, dH = 0.0;
};

/// Closed-form momentum gradient of H0m (production path; the jet engine
/// provides the independent cross-check).
SecularGradient secular_term_gradient(int m, double L, double G, double H,
                                      const PhysicalConstants& c,
                                      const TheoryGuards& guards = {},
                                      const CoefficientTables& tables = CoefficientTables::builtin());

struct SecularFrequencies {
    double n_l = 0.0;   ///< mean-anomaly rate [rad/s]
    double n_g = 0.0;   ///< perigee rate [rad/s]
    double n_h = 0.0;   ///< node rate [rad/s]
};

/// Secular rates: n_l = mu^2/Lhat^3 + sum (J2^m/m!) dH0m/dL', etc., with the
/// H0m derivatives evaluated at (L', G', H).
SecularFrequencies secular_frequencies(double Lhat, double L, double G, double H,
                                       int order, const PhysicalConstants& c,
                                       const TheoryGuards& guards = {},
                                       const CoefficientTables& tables = CoefficientTables::builtin());

// ---- implementation of the templated terms --------------------------------

namespace detail {

template <class T>
T h01_impl(const T& L, const T& G, const T& H, const PhysicalConstants& c) {
    const T h00 = (-c.mu * c.mu / 2.0) / (L * L);
    const T rho = (c.re * c.mu) / (G * G);   // re / p
    const T eta = G / L;
    const T s2 = 1.0 - (H / G) * (H / G);
    return h00 * rho * rho * eta * incl_B0(s2);
}

template <class T>
T h02_impl(const T& L, const T& G, const T& H, const PhysicalConstants& c) {
    const T h00 = (-c.mu * c.mu / 2.0) / (L * L);
    const T rho = (c.re * c.mu) / (G * G);
    const T eta = G / L;
    const T x = 1.0 - (H / G) * (H / G);
    const T p1 = 5.0 * (7.0 * x * x - 16.0 * x + 8.0);
    const T p2 = (6.0 * x - 4.0) * (6.0 * x - 4.0);
    const T p3 = 5.0 * x * x + 8.0 * x - 8.0;
    return h00 * pow_int(rho, 4) * (3.0 / 32.0) * eta * (p1 + eta * p2 + eta * eta * p3);
}

template <class T>
T h03_impl(const T& L, const T& G, const T& H, const PhysicalConstants& c,
           const TheoryGuards& guards, const CoefficientTables& tables) {
    const T x = 1.0 - (H / G) * (H / G);
    double xv;
    if constexpr (std::is_same_v<T, double>) xv = x;
    else xv = x.v;
    const double band = 5.0 * xv - 4.0;
    if (std::abs(band) < guards.critical_inclination_band)
        throw CriticalInclinationError(band);
    const T h00 = (-c.mu * c.mu / 2.0) / (L * L);
    const T rho = (c.re * c.mu) / (G * G);
    const T eta = G / L;
    T tot = T{};
    for (int k = 4; k >= 0; --k) {
        const TablePoly& b = tables.t4_beta(0, k);
        if constexpr (std::is_same_v<T, double>) {
            tot = tot * eta + b.eval(x);
        } else {
            // polynomial of x composed into the jet
            const double v = b.eval(x.v);
            double d1 = 0.0, d2 = 0.0;
            for (int n = 1; n < b.num_len; ++n) d1 += n * b.num[n] * pow_int(x.v, n - 1);
            for (int n = 2; n < b.num_len; ++n) d2 += double(n) * (n - 1) * b.num[n] * pow_int(x.v, n - 2);
            tot = tot * eta + compose(x, v, d1, d2);
        }
    }
    const T den = (5.0 * x - 4.0) * (5.0 * x - 4.0);
    return h00 * pow_int(rho, 6) * (9.0 / 512.0) * eta * tot / den;
}

}  // namespace detail

template <class T>
T eval_secular_term(int m, const T& L, const T& G, const T& H,
                    const PhysicalConstants& c, const TheoryGuards& guards,
                    const CoefficientTables& tables) {
    switch (m) {
        case 1: return detail::h01_impl(L, G, H, c);
        case 2: return detail::h02_impl(L, G, H, c);
        case 3: return detail::h03_impl(L, G, H, c, guards, tables);
        default: throw std::domain_error("eval_secular_term: m must be 1, 2 or 3");
    }
}

}  // namespace brouwer
