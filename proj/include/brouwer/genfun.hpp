#pragma once

#include <cmath>
#include <type_traits>

#include "brouwer/constants.hpp"
#include "brouwer/hamiltonian.hpp"
#include "brouwer/jets.hpp"
#include "brouwer/tables.hpp"

namespace brouwer::genfun {

namespace detail {

inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.v; }

/// Scalar with second-order partials in the two slow variables (x = s^2,
/// eta). Series coefficients are assembled in this tiny arithmetic and
/// composed into the six-coordinate jet once per term.
struct D2 {
    double v = 0.0, dx = 0.0, de = 0.0, dxx = 0.0, dxe = 0.0, dee = 0.0;

    static D2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static D2 var_x(double xv) { return {xv, 1, 0, 0, 0, 0}; }
    static D2 var_eta(double ev) { return {ev, 0, 1, 0, 0, 0}; }

    D2 operator-() const { return {-v, -dx, -de, -dxx, -dxe, -dee}; }
};

inline D2 operator+(const D2& a, const D2& b) {
    return {a.v + b.v, a.dx + b.dx, a.de + b.de, a.dxx + b.dxx, a.dxe + b.dxe, a.dee + b.dee};
}
inline D2 operator-(const D2& a, const D2& b) {
    return {a.v - b.v, a.dx - b.dx, a.de - b.de, a.dxx - b.dxx, a.dxe - b.dxe, a.dee - b.dee};
}
inline D2 operator+(const D2& a, double s) { D2 r = a; r.v += s; return r; }
inline D2 operator+(double s, const D2& a) { return a + s; }
inline D2 operator-(const D2& a, double s) { D2 r = a; r.v -= s; return r; }
inline D2 operator-(double s, const D2& a) { return -a + s; }
inline D2 operator*(const D2& a, double s) {
    return {a.v * s, a.dx * s, a.de * s, a.dxx * s, a.dxe * s, a.dee * s};
}
inline D2 operator*(double s, const D2& a) { return a * s; }
inline D2 operator*(const D2& a, const D2& b) {
    return {a.v * b.v,
            a.dx * b.v + a.v * b.dx,
            a.de * b.v + a.v * b.de,
            a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx,
            a.dxe * b.v + a.dx * b.de + a.de * b.dx + a.v * b.dxe,
            a.dee * b.v + 2.0 * a.de * b.de + a.v * b.dee};
}
inline D2 recip(const D2& a) {
    const double iv = 1.0 / a.v;
    const double iv2 = iv * iv, iv3 = iv2 * iv;
    return {iv, -a.dx * iv2, -a.de * iv2,
            (2.0 * a.dx * a.dx - a.dxx * a.v) * iv3,
            (2.0 * a.dx * a.de - a.dxe * a.v) * iv3,
            (2.0 * a.de * a.de - a.dee * a.v) * iv3};
}
inline D2 operator/(const D2& a, const D2& b) { return a * recip(b); }
inline D2 operator/(double s, const D2& a) { return recip(a) * s; }
inline D2 operator/(const D2& a, double s) { return a * (1.0 / s); }
inline D2 pow_int(D2 b, int n) {
    D2 r = D2::constant(1.0);
    int m = n < 0 ? -n : n;
    while (m) {
        if (m & 1) r = r * b;
        b = b * b;
        m >>= 1;
    }
    return n < 0 ? recip(r) : r;
}
/// sqrt(1 - eta^2) as a D2 (requires e > 0)
inline D2 ecc_of_eta(double ev, double etav) {
    const double ie = 1.0 / ev;
    return {ev, 0.0, -etav * ie, 0.0, 0.0, -ie - etav * etav * ie * ie * ie};
}
/// table polynomial in x as a D2
inline D2 poly_x(const TablePoly& p, double xv) {
    double v, d1, d2;
    p.eval_num2(xv, v, d1, d2);
    D2 n{v, d1, 0.0, d2, 0.0, 0.0};
    if (p.den_len == 0) return n;
    p.eval_den2(xv, v, d1, d2);
    return n / D2{v, d1, 0.0, d2, 0.0, 0.0};
}

/// compose a D2 coefficient into the scalar type of the chart
inline double from_bivariate(const D2& q, const double&, const double&) { return q.v; }
inline Jet2 from_bivariate(const D2& q, const Jet2& x, const Jet2& eta) {
    return compose2(x, eta, q.v, q.dx, q.de, q.dxx, q.dxe, q.dee);
}

inline void check_critical(double x, const TheoryGuards& g) {
    const double band = 5.0 * x - 4.0;
    if (std::abs(band) < g.critical_inclination_band)
        throw CriticalInclinationError(band);
}

}  // namespace detail

/// Anomaly-independent first-order term C1 of the determining function.
template <class T>
T eval_C1(const Chart<T>& ch, const PhysicalConstants& c, const TheoryGuards& g = {}) {
    using std::sin;
    using detail::D2;
    const double xv = detail::value_of(ch.s2);
    detail::check_critical(xv, g);
    const D2 x = D2::var_x(xv);
    const D2 eta = D2::var_eta(detail::value_of(ch.eta));
    const D2 coef = x * (15.0 * x - 14.0) / (32.0 * (5.0 * x - 4.0)) * (1.0 - eta * eta);
    const T rho = c.re / ch.p;
    return ch.G * (rho * rho) * (detail::from_bivariate(coef, ch.s2, ch.eta) * sin(2.0 * ch.g));
}

/// First-order determining function W1 = V1 + C1.
template <class T>
T eval_W1(const Chart<T>& ch, const PhysicalConstants& c, const TheoryGuards& g = {}) {
    using std::sin;
    using detail::D2;
    const double xv = detail::value_of(ch.s2);
    const D2 x = D2::var_x(xv);
    const D2 ecc = detail::ecc_of_eta(detail::value_of(ch.e), detail::value_of(ch.eta));
    const D2 b[2] = {1.0 - 1.5 * x, 0.75 * x};
    T tot = detail::from_bivariate(b[0], ch.s2, ch.eta) * ch.phi;
    for (int i = 0; i <= 1; ++i) {
        for (int j = std::max(i, 1); j <= 2 * i + 1; ++j) {
            const int js = j % 2;
            const D2 coef = b[i] * (pow_int(2.0 - js, i) / double(j))
                            * detail::pow_int(ecc, std::abs(j - 2 * i));
            tot = tot + detail::from_bivariate(coef, ch.s2, ch.eta)
                            * sin(double(j) * ch.f + double(2 * i) * ch.g);
        }
    }
    const T rho = c.re / ch.p;
    return (-0.5) * ch.G * (rho * rho) * tot + eval_C1(ch, c, g);
}

/// Short-period part V1 = W1 - C1.
template <class T>
T eval_V1(const Chart<T>& ch, const PhysicalConstants& c, const TheoryGuards& g = {}) {
    return eval_W1(ch, c, g) - eval_C1(ch, c, g);
}

/// Closed-form partial derivatives of C1 (production path for the
/// table-2 series; the jet engine is the independent cross-check).
struct C1Partials {
    double dg = 0.0, dG = 0.0, dL = 0.0;
};

C1Partials c1_partials(const Chart<double>& ch, const PhysicalConstants& c,
                       const TheoryGuards& g = {});

/// Second-order known term {H10 + H01, V1} in series form (table 1).
double eval_htilde02_prime(const Chart<double>& ch, const PhysicalConstants& c,
                           const CoefficientTables& tables = CoefficientTables::builtin());

/// Second-order known term {H10 + H01, C1} in series form (table 2).
double eval_htilde02_star(const Chart<double>& ch, const PhysicalConstants& c,
                          const C1Partials& dc1,
                          const CoefficientTables& tables = CoefficientTables::builtin());

/// Mean-anomaly average of the table-1 series (closed form).
double htilde02_prime_avg(const Chart<double>& ch, const PhysicalConstants& c);

/// Mean-anomaly average of the table-2 series (closed form).
double htilde02_star_avg(const Chart<double>& ch, const PhysicalConstants& c,
                         const C1Partials& dc1);

/// Mean-anomaly average of the directly computable third-order terms
/// (closed form, table 4; all three inclination rows).
double htilde03_prime_avg(const Chart<double>& ch, const PhysicalConstants& c,
                          const TheoryGuards& g = {},
                          const CoefficientTables& tables = CoefficientTables::builtin());

/// Average of the C2-dependent third-order terms (closed form).
double htilde03_star_avg(const Chart<double>& ch, const PhysicalConstants& c,
                         const TheoryGuards& g = {},
                         const CoefficientTables& tables = CoefficientTables::builtin());

/// <cos(m f + alpha)>_l in closed form.
double kozai_average(int m, double alpha, double e);

/// <(p/r)^2 phi sin(m f + alpha)>_l in closed form (integration by parts).
double ibp_average(int m, double alpha, double e);

/// Second-order generating-function terms. Coefficients of every periodic
/// term depend only on (s^2, eta); they are assembled in bivariate scalars
/// and composed into the chart scalar once per term.
template <class T>
T eval_V2(const Chart<T>& ch, const PhysicalConstants& c, const TheoryGuards& g = {},
          const CoefficientTables& tables = CoefficientTables::builtin()) {
    using std::cos;
    using std::sin;
    using detail::D2;
    const double xv = detail::value_of(ch.s2);
    detail::check_critical(xv, g);
    const double etav = detail::value_of(ch.eta);
    const D2 x = D2::var_x(xv);
    const D2 eta = D2::var_eta(etav);
    const D2 ecc = detail::ecc_of_eta(detail::value_of(ch.e), etav);

    // equation-of-the-center block
    const D2 e2 = 1.0 - eta * eta;
    const D2 blk0 = -eta * eta * (5.0 * x * x + 8.0 * x - 8.0)
                    - 5.0 * (7.0 * x * x - 16.0 * x + 8.0);
    const D2 blk2g = -(15.0 * x - 14.0) * e2 * x;
    T blk = detail::from_bivariate(blk0, ch.s2, ch.eta)
            + detail::from_bivariate(blk2g, ch.s2, ch.eta) * cos(2.0 * ch.g);
    const D2 kj = 12.0 * x * (5.0 * x - 4.0);
    for (int j = 1; j <= 3; ++j) {
        const int js = j % 2;
        const D2 coef = kj * ((2.0 - js) / double(j)) * detail::pow_int(ecc, js);
        blk = blk + detail::from_bivariate(coef, ch.s2, ch.eta)
                      * cos(double(j) * ch.f + 2.0 * ch.g);
    }
    const T rho4 = pow_int(c.re / ch.p, 4);
    T out = ch.G * rho4 * (3.0 / 64.0) * (ch.phi * blk);

    // periodic series with table-3 polynomials
    T series{};
    for (int i = 0; i <= 2; ++i) {
        const int is = i % 2;
        const int jmin = 2 * ((i + 1) % 2) - 1;
        const int jmax = 4 + i + (i - 1) / 2;
        const D2 lead = detail::pow_int(x, i)
                        / (detail::pow_int(5.0 * x - 4.0, 2 - is)
                           * detail::pow_int(1.0 + eta, (3 - i) / 2));
        for (int j = jmin; j <= jmax; ++j) {
            const int js = std::abs(j) % 2;
            D2 etas{};
            bool any = false;
            for (int k = 3; k >= 0; --k) {
                const TablePoly& plk = tables.t3_beta(i, j, k);
                if (plk.num_len == 0 && !any) continue;
                any = true;
                etas = etas * eta + detail::poly_x(plk, xv);
            }
            if (!any) continue;
            const D2 coef = lead * etas * detail::pow_int(ecc, js);
            series = series + detail::from_bivariate(coef, ch.s2, ch.eta)
                              * sin(double(j) * ch.f + double(2 * i) * ch.g);
        }
    }
    return out + ch.G * rho4 * ((1.0 / 512.0) * series);
}

template <class T>
T eval_C2(const Chart<T>& ch, const PhysicalConstants& c, const TheoryGuards& g = {},
          const CoefficientTables& tables = CoefficientTables::builtin()) {
    using std::sin;
    using detail::D2;
    const double xv = detail::value_of(ch.s2);
    detail::check_critical(xv, g);
    const double etav = detail::value_of(ch.eta);
    const D2 x = D2::var_x(xv);
    const D2 eta = D2::var_eta(etav);
    const D2 e2 = 1.0 - eta * eta;
    T out{};
    for (int i = 1; i <= 2; ++i) {
        const int is = i % 2;
        D2 etas{};
        for (int k = 4 - 2 * i + is; k >= 0; --k)
            etas = etas * eta + detail::poly_x(tables.t4_beta(i, k), xv);
        const D2 coef = etas * detail::pow_int(x, i) * detail::pow_int(e2, i)
                        / (detail::pow_int(5.0 * x - 4.0, i + 1)
                           * detail::pow_int(1.0 + eta, is) * double(2 * i));
        out = out + detail::from_bivariate(coef, ch.s2, ch.eta) * sin(double(2 * i) * ch.g);
    }
    return ch.G * pow_int(c.re / ch.p, 4) * ((1.0 / 256.0) * out);
}

template <class T>
T eval_W2(const Chart<T>& ch, const PhysicalConstants& c, const TheoryGuards& g = {},
          const CoefficientTables& tables = CoefficientTables::builtin()) {
    return eval_V2(ch, c, g, tables) + eval_C2(ch, c, g, tables);
}

}  // namespace brouwer::genfun
