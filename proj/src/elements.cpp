#include "brouwer/elements.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "brouwer/angles.hpp"

namespace brouwer {

void KeplerianSet::validate() const {
    if (!(a > 0.0)) throw std::domain_error("KeplerianSet: a must be positive");
    if (!(e >= 0.0 && e < 1.0)) throw std::domain_error("KeplerianSet: e must be in [0,1)");
    if (!(inc >= 0.0 && inc <= std::numbers::pi))
        throw std::domain_error("KeplerianSet: inclination must be in [0,pi]");
}

void DelaunayState::validate() const {
    if (!(L > 0.0)) throw std::domain_error("DelaunayState: L must be positive");
    if (!(G > 0.0 && G <= L * (1.0 + 1e-12)))
        throw std::domain_error("DelaunayState: G must satisfy 0 < G <= L");
    if (!(std::abs(H) <= G * (1.0 + 1e-12)))
        throw std::domain_error("DelaunayState: |H| must not exceed G");
}

void PolarNodalState::validate() const {
    if (!(r > 0.0)) throw std::domain_error("PolarNodalState: r must be positive");
    if (!(Theta > 0.0)) throw std::domain_error("PolarNodalState: Theta must be positive");
    if (!(std::abs(N) <= Theta * (1.0 + 1e-12)))
        throw std::domain_error("PolarNodalState: |N| must not exceed Theta");
}

double solve_kepler(double mean_anomaly, double e) {
    if (!(e >= 0.0 && e < 1.0))
        throw std::domain_error("solve_kepler: e must be in [0,1)");
    // work on the reduced anomaly, shift the revolution count back afterwards
    const double l = wrap_pi(mean_anomaly);
    const double rev = mean_anomaly - l;
    constexpr double tol = 1e-14;

    double E = l + e * std::sin(l);
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
        const double res = E - e * std::sin(E) - l;
        const double dE = res / (1.0 - e * std::cos(E));
        E -= dE;
        if (std::abs(dE) <= tol) {
            converged = true;
            break;
        }
    }
    if (!converged || std::abs(E - e * std::sin(E) - l) > 16.0 * tol) {
        // bisection fallback: E - e sinE - l is increasing in E
        double lo = l - e, hi = l + e;
        for (int it = 0; it < 200; ++it) {
            E = 0.5 * (lo + hi);
            if (E - e * std::sin(E) - l > 0.0) hi = E;
            else lo = E;
            if (hi - lo < tol) break;
        }
    }
    return E + rev;
}

AnomalySet anomalies_from_mean(double mean_anomaly, double a, double e) {
    if (!(a > 0.0)) throw std::domain_error("anomalies_from_mean: a must be positive");
    AnomalySet out{};
    out.E = solve_kepler(mean_anomaly, e);
    const double u = 1.0 - e * std::cos(out.E);
    out.r = a * u;
    const double sf = std::sqrt(1.0 - e * e) * std::sin(out.E) / u;
    const double cf = (std::cos(out.E) - e) / u;
    // keep f in the same revolution as E so that phi = f - l stays small
    const double fp = std::atan2(sf, cf);
    out.f = fp + two_pi * std::round((out.E - fp) / two_pi);
    out.phi = out.f - mean_anomaly;
    return out;
}

DelaunayState delaunay_from_keplerian(const KeplerianSet& kep, const PhysicalConstants& c) {
    kep.validate();
    DelaunayState d{};
    d.l = wrap_two_pi(kep.ml);
    d.g = wrap_two_pi(kep.argp);
    d.h = wrap_two_pi(kep.raan);
    d.L = std::sqrt(c.mu * kep.a);
    d.G = d.L * std::sqrt(1.0 - kep.e * kep.e);
    d.H = d.G * std::cos(kep.inc);
    return d;
}

KeplerianSet keplerian_from_delaunay(const DelaunayState& d, const PhysicalConstants& c) {
    d.validate();
    KeplerianSet k{};
    k.a = d.L * d.L / c.mu;
    const double eta = d.G / d.L;
    k.e = std::sqrt(std::max(0.0, 1.0 - eta * eta));
    k.inc = std::acos(std::clamp(d.H / d.G, -1.0, 1.0));
    k.raan = wrap_two_pi(d.h);
    k.argp = wrap_two_pi(d.g);
    k.ml = wrap_two_pi(d.l);
    return k;
}

PolarNodalState polar_nodal_from_delaunay(const DelaunayState& d, const PhysicalConstants& c) {
    d.validate();
    const double a = d.L * d.L / c.mu;
    const double eta = d.G / d.L;
    const double e = std::sqrt(std::max(0.0, 1.0 - eta * eta));
    const AnomalySet an = anomalies_from_mean(d.l, a, e);
    PolarNodalState p{};
    p.r = an.r;
    p.theta = an.f + d.g;
    p.nu = d.h;
    p.R = (c.mu / d.G) * e * std::sin(an.f);
    p.Theta = d.G;
    p.N = d.H;
    return p;
}

DelaunayState delaunay_from_polar_nodal(const PolarNodalState& p, const PhysicalConstants& c) {
    p.validate();
    const double prm = p.Theta * p.Theta / c.mu;
    const double esf = p.R * p.Theta / c.mu;
    const double ecf = prm / p.r - 1.0;
    const double e = std::hypot(esf, ecf);
    if (e >= 1.0) throw std::domain_error("delaunay_from_polar_nodal: not an elliptic state");
    const double v2 = p.R * p.R + (p.Theta / p.r) * (p.Theta / p.r);
    const double ainv = 2.0 / p.r - v2 / c.mu;
    if (!(ainv > 0.0)) throw std::domain_error("delaunay_from_polar_nodal: not an elliptic state");
    const double f = std::atan2(esf, ecf);
    const double E = 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(0.5 * f),
                                      std::sqrt(1.0 + e) * std::cos(0.5 * f));
    DelaunayState d{};
    d.l = wrap_two_pi(E - e * std::sin(E));
    d.g = wrap_two_pi(p.theta - f);
    d.h = wrap_two_pi(p.nu);
    d.L = std::sqrt(c.mu / ainv);
    d.G = p.Theta;
    d.H = p.N;
    return d;
}

CartesianState cartesian_from_polar_nodal(const PolarNodalState& p) {
    p.validate();
    const double ci = p.N / p.Theta;
    const double si = std::sqrt(std::max(0.0, 1.0 - ci * ci));
    const double ct = std::cos(p.theta), st = std::sin(p.theta);
    const double cn = std::cos(p.nu), sn = std::sin(p.nu);
    // unit radial vector and its theta-derivative
    const Vec3 u{cn * ct - sn * ci * st, sn * ct + cn * ci * st, si * st};
    const Vec3 w{-cn * st - sn * ci * ct, -sn * st + cn * ci * ct, si * ct};
    CartesianState s{};
    const double td = p.Theta / p.r;
    for (int i = 0; i < 3; ++i) {
        s.position[i] = p.r * u[i];
        s.velocity[i] = p.R * u[i] + td * w[i];
    }
    return s;
}

PolarNodalState polar_nodal_from_cartesian(const CartesianState& s) {
    const auto& x = s.position;
    const auto& v = s.velocity;
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (!(r > 0.0)) throw std::domain_error("polar_nodal_from_cartesian: zero radius");
    const Vec3 am{x[1] * v[2] - x[2] * v[1],
                  x[2] * v[0] - x[0] * v[2],
                  x[0] * v[1] - x[1] * v[0]};
    const double Theta = std::sqrt(am[0] * am[0] + am[1] * am[1] + am[2] * am[2]);
    PolarNodalState p{};
    p.r = r;
    p.R = (x[0] * v[0] + x[1] * v[1] + x[2] * v[2]) / r;
    p.Theta = Theta;
    p.N = am[2];
    p.nu = wrap_two_pi(std::atan2(am[0], -am[1]));
    const double ci = am[2] / Theta;
    const double si = std::sqrt(std::max(0.0, 1.0 - ci * ci));
    // argument of latitude from the node line
    const double cn = std::cos(p.nu), sn = std::sin(p.nu);
    const double xnode = x[0] * cn + x[1] * sn;
    double ynode;
    if (si > 1e-12) {
        ynode = x[2] / si;
    } else {
        ynode = (x[1] * cn - x[0] * sn) / ci;
    }
    p.theta = wrap_two_pi(std::atan2(ynode, xnode));
    return p;
}

CartesianState cartesian_from_delaunay(const DelaunayState& d, const PhysicalConstants& c) {
    return cartesian_from_polar_nodal(polar_nodal_from_delaunay(d, c));
}

}  // namespace brouwer
