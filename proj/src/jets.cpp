#include "brouwer/jets.hpp"

#include <cmath>

#include "brouwer/angles.hpp"

namespace brouwer {

Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v + b.v;
    for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] + b.d[i];
    for (int i = 0; i < 21; ++i) r.dd[i] = a.dd[i] + b.dd[i];
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v - b.v;
    for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] - b.d[i];
    for (int i = 0; i < 21; ++i) r.dd[i] = a.dd[i] - b.dd[i];
    return r;
}

Jet2 operator*(const Jet2& a, double s) {
    Jet2 r;
    r.v = a.v * s;
    for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] * s;
    for (int i = 0; i < 21; ++i) r.dd[i] = a.dd[i] * s;
    return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v * b.v;
    for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    int k = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j, ++k)
            r.dd[k] = a.dd[k] * b.v + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.v * b.dd[k];
    return r;
}

Jet2 compose(const Jet2& x, double f, double f1, double f2) {
    Jet2 r;
    r.v = f;
    for (int i = 0; i < 6; ++i) r.d[i] = f1 * x.d[i];
    int k = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j, ++k)
            r.dd[k] = f1 * x.dd[k] + f2 * x.d[i] * x.d[j];
    return r;
}

Jet2 compose2(const Jet2& x, const Jet2& y,
              double f, double fx, double fy, double fxx, double fxy, double fyy) {
    Jet2 r;
    r.v = f;
    for (int i = 0; i < 6; ++i) r.d[i] = fx * x.d[i] + fy * y.d[i];
    int k = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j, ++k)
            r.dd[k] = fx * x.dd[k] + fy * y.dd[k]
                      + fxx * x.d[i] * x.d[j]
                      + fxy * (x.d[i] * y.d[j] + x.d[j] * y.d[i])
                      + fyy * y.d[i] * y.d[j];
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double inv = 1.0 / b.v;
    return compose2(a, b, a.v * inv, inv, -a.v * inv * inv,
                    0.0, -inv * inv, 2.0 * a.v * inv * inv * inv);
}

Jet2 operator/(double s, const Jet2& a) {
    const double inv = 1.0 / a.v;
    return compose(a, s * inv, -s * inv * inv, 2.0 * s * inv * inv * inv);
}

Jet2 sin(const Jet2& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return compose(x, s, c, -s);
}

Jet2 cos(const Jet2& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return compose(x, c, -s, -c);
}

Jet2 sqrt(const Jet2& x) {
    const double s = std::sqrt(x.v);
    return compose(x, s, 0.5 / s, -0.25 / (s * x.v));
}

Jet2 atan2(const Jet2& y, const Jet2& x) {
    // d atan2(y,x) = (x dy - y dx) / (x^2 + y^2)
    const double q = x.v * x.v + y.v * y.v;
    const double fy = x.v / q;
    const double fx = -y.v / q;
    const double q2 = q * q;
    const double fyy = -2.0 * x.v * y.v / q2;
    const double fxx = 2.0 * x.v * y.v / q2;
    const double fxy = (y.v * y.v - x.v * x.v) / q2;
    return compose2(x, y, std::atan2(y.v, x.v), fx, fy, fxx, fxy, fyy);
}

Jet2 pow_int(const Jet2& x, int n) {
    const double f = pow_int(x.v, n);
    const double f1 = n * pow_int(x.v, n - 1);
    const double f2 = double(n) * (n - 1) * pow_int(x.v, n - 2);
    return compose(x, f, f1, f2);
}

std::array<Jet2, 6> lift_state(const DelaunayState& d) {
    return {Jet2::seed(d.l, 0), Jet2::seed(d.g, 1), Jet2::seed(d.h, 2),
            Jet2::seed(d.L, 3), Jet2::seed(d.G, 4), Jet2::seed(d.H, 5)};
}

Chart<double> make_chart(const DelaunayState& d, const PhysicalConstants& c) {
    Chart<double> ch{};
    ch.l = d.l; ch.g = d.g; ch.h = d.h;
    ch.L = d.L; ch.G = d.G; ch.H = d.H;
    ch.eta = d.G / d.L;
    ch.e2 = std::max(0.0, 1.0 - ch.eta * ch.eta);
    ch.e = std::sqrt(ch.e2);
    ch.a = d.L * d.L / c.mu;
    ch.p = d.G * d.G / c.mu;
    ch.s2 = 1.0 - (d.H / d.G) * (d.H / d.G);
    ch.s = std::sqrt(std::max(0.0, ch.s2));
    const AnomalySet an = anomalies_from_mean(d.l, ch.a, ch.e);
    ch.E = an.E; ch.f = an.f; ch.r = an.r; ch.phi = an.phi;
    ch.n = c.mu * c.mu / (d.L * d.L * d.L);
    return ch;
}

Chart<Jet2> make_jet_chart(const DelaunayState& d, const PhysicalConstants& c,
                           double eccentricity_floor) {
    d.validate();
    Chart<Jet2> ch{};
    const auto seeds = lift_state(d);
    ch.l = seeds[0]; ch.g = seeds[1]; ch.h = seeds[2];
    ch.L = seeds[3]; ch.G = seeds[4]; ch.H = seeds[5];
    ch.eta = ch.G / ch.L;
    ch.e2 = 1.0 - ch.eta * ch.eta;
    if (ch.e2.v < eccentricity_floor * eccentricity_floor)
        throw EccentricityFloorError(std::sqrt(std::max(0.0, ch.e2.v)));
    ch.e = sqrt(ch.e2);
    ch.a = ch.L * ch.L * (1.0 / c.mu);
    ch.p = ch.G * ch.G * (1.0 / c.mu);
    ch.s2 = 1.0 - (ch.H / ch.G) * (ch.H / ch.G);
    ch.s = sqrt(ch.s2);
    ch.n = c.mu * c.mu / (d.L * d.L * d.L);

    // E(l, e) by implicit differentiation of E - e sin E = l
    const double E0 = solve_kepler(d.l, ch.e.v);
    {
        const double se = std::sin(E0), ce = std::cos(E0);
        const double e0 = ch.e.v;
        const double u = 1.0 - e0 * ce;
        const double El = 1.0 / u;
        const double Ee = se / u;
        const double u3 = u * u * u;
        const double Ell = -e0 * se / u3;
        const double Ele = (u * ce - e0 * se * se) / u3;
        const double Eee = (2.0 * se * ce * u - e0 * se * se * se) / u3;
        ch.E = compose2(ch.l, ch.e, E0, El, Ee, Ell, Ele, Eee);
    }
    // true anomaly from sin f, cos f, unwrapped to the revolution of E
    const Jet2 u = 1.0 - ch.e * cos(ch.E);
    const Jet2 sf = ch.eta * sin(ch.E) / u;
    const Jet2 cf = (cos(ch.E) - ch.e) / u;
    Jet2 f = atan2(sf, cf);
    f.v += two_pi * std::round((ch.E.v - f.v) / two_pi);
    ch.f = f;
    ch.phi = ch.f - ch.l;
    ch.r = ch.a * u;
    return ch;
}

double poisson_bracket_value(const Jet2& F, const Jet2& G) {
    double t = 0.0;
    for (int q = 0; q < 3; ++q) {
        const int p = q + 3;
        t += F.d[q] * G.d[p] - F.d[p] * G.d[q];
    }
    return t;
}

Jet2 poisson_bracket_jet(const Jet2& F, const Jet2& G) {
    Jet2 r;
    r.v = poisson_bracket_value(F, G);
    for (int x = 0; x < 6; ++x) {
        double t = 0.0;
        for (int q = 0; q < 3; ++q) {
            const int p = q + 3;
            t += F.hess(q, x) * G.d[p] + F.d[q] * G.hess(p, x)
                 - F.hess(p, x) * G.d[q] - F.d[p] * G.hess(q, x);
        }
        r.d[x] = t;
    }
    return r;
}

double poisson_bracket(const DifferentiableScalar& F, const DifferentiableScalar& G,
                       const DelaunayState& d, const PhysicalConstants& c,
                       double eccentricity_floor) {
    const Chart<Jet2> ch = make_jet_chart(d, c, eccentricity_floor);
    return poisson_bracket_value(F(ch), G(ch));
}

}  // namespace brouwer
