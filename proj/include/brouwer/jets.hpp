#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "brouwer/constants.hpp"
#include "brouwer/elements.hpp"

namespace brouwer {

/// Second-order truncated Taylor coefficient set over the six Delaunay
/// coordinates (l, g, h, L, G, H): value, gradient and symmetric Hessian.
/// Arithmetic propagates derivatives exactly (no differencing).
struct Jet2 {
    double v = 0.0;
    std::array<double, 6> d{};     // gradient
    std::array<double, 21> dd{};   // Hessian, packed upper triangle

    /// packed index of second partial (i,j), i <= j
    static constexpr int idx(int i, int j) {
        // row-major upper triangle: (0,0)..(0,5),(1,1)..(1,5),...
        return i * 6 - i * (i - 1) / 2 + (j - i);
    }
    double hess(int i, int j) const { return i <= j ? dd[idx(i, j)] : dd[idx(j, i)]; }

    static Jet2 constant(double value) {
        Jet2 r;
        r.v = value;
        return r;
    }
    static Jet2 seed(double value, int coord) {
        Jet2 r;
        r.v = value;
        r.d[coord] = 1.0;
        return r;
    }

    Jet2 operator-() const {
        Jet2 r;
        r.v = -v;
        for (int i = 0; i < 6; ++i) r.d[i] = -d[i];
        for (int i = 0; i < 21; ++i) r.dd[i] = -dd[i];
        return r;
    }
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);

inline Jet2 operator+(const Jet2& a, double s) { Jet2 r = a; r.v += s; return r; }
inline Jet2 operator+(double s, const Jet2& a) { return a + s; }
inline Jet2 operator-(const Jet2& a, double s) { Jet2 r = a; r.v -= s; return r; }
inline Jet2 operator-(double s, const Jet2& a) { return -a + s; }
Jet2 operator*(const Jet2& a, double s);
inline Jet2 operator*(double s, const Jet2& a) { return a * s; }
inline Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
Jet2 operator/(double s, const Jet2& a);

/// compose a scalar function y = f(x) with known f', f'' at x.v
Jet2 compose(const Jet2& x, double f, double f1, double f2);
/// compose a two-argument scalar function with its partials at (x.v, y.v)
Jet2 compose2(const Jet2& x, const Jet2& y,
              double f, double fx, double fy, double fxx, double fxy, double fyy);

Jet2 sin(const Jet2& x);
Jet2 cos(const Jet2& x);
Jet2 sqrt(const Jet2& x);
Jet2 atan2(const Jet2& y, const Jet2& x);
Jet2 pow_int(const Jet2& x, int n);

// make unqualified generic code work for double as well
inline double pow_int(double x, int n) {
    double r = 1.0, b = x;
    int m = n < 0 ? -n : n;
    while (m) {
        if (m & 1) r *= b;
        b *= b;
        m >>= 1;
    }
    return n < 0 ? 1.0 / r : r;
}

/// Common functions of the Delaunay chart, evaluated once per state with a
/// scalar type T (double for plain evaluation, Jet2 for derivatives).
template <class T>
struct Chart {
    T l, g, h, L, G, H;        // coordinates
    T eta, e, e2, a, p, s2, s; // orbit functions of the momenta
    T E, f, r, phi;            // anomalies (f in the same revolution as E)
    double n = 0.0;            // mean motion, plain value
};

/// Lift a Delaunay state to the six Jet2 seeds.
std::array<Jet2, 6> lift_state(const DelaunayState& d);

/// Build the double chart (no derivatives).
Chart<double> make_chart(const DelaunayState& d, const PhysicalConstants& c);

/// Build the Jet2 chart: anomaly derivatives by implicit differentiation of
/// Kepler's equation (not by differentiating solver iterations).
/// Throws EccentricityFloorError when e < floor.
Chart<Jet2> make_jet_chart(const DelaunayState& d, const PhysicalConstants& c,
                           double eccentricity_floor = 1.0e-6);

/// An evaluation recipe producing a Jet2 from a lifted chart.
using DifferentiableScalar = std::function<Jet2(const Chart<Jet2>&)>;

/// Poisson bracket {F, G} from two evaluated jets (value only).
double poisson_bracket_value(const Jet2& F, const Jet2& G);

/// Poisson bracket with first-order derivatives retained, so nested brackets
/// such as {{xi, W1}, W1} are exact. The returned Hessian is not carried
/// (zero): only value and gradient of the bracket are meaningful.
Jet2 poisson_bracket_jet(const Jet2& F, const Jet2& G);

/// Evaluate {F, G} at a state.
double poisson_bracket(const DifferentiableScalar& F, const DifferentiableScalar& G,
                       const DelaunayState& d, const PhysicalConstants& c,
                       double eccentricity_floor = 1.0e-6);

}  // namespace brouwer
