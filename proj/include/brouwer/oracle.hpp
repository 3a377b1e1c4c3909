#pragma once

#include <span>
#include <vector>

#include "brouwer/constants.hpp"
#include "brouwer/elements.hpp"
#include "brouwer/secular.hpp"

namespace brouwer {

/// Main-problem acceleration (two-body + J2 gradient) [km/s^2].
Vec3 main_problem_acceleration(const Vec3& position, const PhysicalConstants& c);

struct IntegratorStats {
    long steps = 0;
    long rejected = 0;
    long rhs_evaluations = 0;
    double tolerance = 0.0;
};

/// Numerically integrated trajectory sampled at requested times.
struct Trajectory {
    std::vector<double> t;
    std::vector<CartesianState> states;
    IntegratorStats stats;
};

/// Adaptive Dormand-Prince 8(5,3) integration of the main problem in
/// Cartesian coordinates, stopping exactly on every requested sample time.
/// tol in [1e-14, 1e-9] acts as the relative tolerance.
Trajectory integrate_trajectory(const CartesianState& x0, std::span<const double> times,
                                double tol, const PhysicalConstants& c);

/// Per-sample position error magnitude between an analytic ephemeris and the
/// integrated truth (grids must match).
std::vector<std::pair<double, double>> compare_rss(std::span<const EphemerisRecord> analytic,
                                                   const Trajectory& truth);

}  // namespace brouwer
