#pragma once

#include <array>

#include "brouwer/constants.hpp"

namespace brouwer {

using Vec3 = std::array<double, 3>;

/// Classical Keplerian elements (angles in rad, lengths in km).
struct KeplerianSet {
    double a;      ///< semi-major axis [km]
    double e;      ///< eccentricity
    double inc;    ///< inclination [rad]
    double raan;   ///< longitude of the ascending node [rad]
    double argp;   ///< argument of perigee [rad]
    double ml;     ///< mean anomaly [rad]

    void validate() const;
};

/// Delaunay action-angle chart (l, g, h, L, G, H).
struct DelaunayState {
    double l;   ///< mean anomaly [rad]
    double g;   ///< argument of perigee [rad]
    double h;   ///< node longitude [rad]
    double L;   ///< sqrt(mu a) [km^2/s]
    double G;   ///< angular momentum [km^2/s]
    double H;   ///< polar component of angular momentum [km^2/s]

    void validate() const;
};

/// Polar-nodal chart (r, theta, nu, R, Theta, N), regular at e = 0.
struct PolarNodalState {
    double r;        ///< radius [km]
    double theta;    ///< argument of latitude [rad]
    double nu;       ///< node longitude [rad]
    double R;        ///< radial velocity [km/s]
    double Theta;    ///< angular momentum [km^2/s]
    double N;        ///< polar component of angular momentum [km^2/s]

    void validate() const;
};

/// Inertial Cartesian state.
struct CartesianState {
    Vec3 position;   ///< [km]
    Vec3 velocity;   ///< [km/s]
};

/// Anomalies and radius consistent with (l, a, e).
struct AnomalySet {
    double E;     ///< eccentric anomaly [rad], same revolution as l
    double f;     ///< true anomaly [rad], same revolution as E
    double r;     ///< radius [km]
    double phi;   ///< equation of the center f - l, unwrapped to |phi| < pi
};

/// Solve Kepler's equation E - e sin E = l.
///
/// Newton iteration from E0 = l + e sin l with a bisection fallback;
/// converges to |E - e sin E - l| <= 1e-14 for 0 <= e < 1.
double solve_kepler(double mean_anomaly, double e);

/// Eccentric/true anomaly, radius and equation of the center from (l, a, e).
AnomalySet anomalies_from_mean(double mean_anomaly, double a, double e);

DelaunayState delaunay_from_keplerian(const KeplerianSet& kep, const PhysicalConstants& c);
KeplerianSet keplerian_from_delaunay(const DelaunayState& d, const PhysicalConstants& c);

PolarNodalState polar_nodal_from_delaunay(const DelaunayState& d, const PhysicalConstants& c);
DelaunayState delaunay_from_polar_nodal(const PolarNodalState& p, const PhysicalConstants& c);

CartesianState cartesian_from_polar_nodal(const PolarNodalState& p);
PolarNodalState polar_nodal_from_cartesian(const CartesianState& s);

CartesianState cartesian_from_delaunay(const DelaunayState& d, const PhysicalConstants& c);

}  // namespace brouwer
