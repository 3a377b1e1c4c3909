#pragma once

#include <stdexcept>

namespace brouwer {

/// Gravity-field constants of the main problem. Units: km, s, rad.
struct PhysicalConstants {
    double mu = 398600.4415;        ///< gravitational parameter [km^3/s^2]
    double re = 6378.1363;          ///< equatorial radius [km]
    double j2 = 1.082626683e-3;     ///< oblateness coefficient (J2 = -C_{2,0})

    void validate() const {
        if (!(mu > 0.0) || !(re > 0.0))
            throw std::domain_error("PhysicalConstants: mu and re must be positive");
        if (!(j2 >= 0.0) || j2 >= 0.1)
            throw std::domain_error("PhysicalConstants: j2 out of range");
    }
};

/// Numerical guards of the perturbation theory.
struct TheoryGuards {
    /// refuse g-dependent second/third-order machinery when |5 s^2 - 4| falls below this
    double critical_inclination_band = 1.0e-3;
    /// refuse jet differentiation through e when e falls below this
    double eccentricity_floor = 1.0e-6;
};

/// Thrown when |5 sin^2 I - 4| is inside the critical-inclination guard band.
class CriticalInclinationError : public std::domain_error {
public:
    explicit CriticalInclinationError(double five_s2_minus_4)
        : std::domain_error("critical inclination guard: |5 s^2 - 4| = "
                            + std::to_string(five_s2_minus_4 < 0 ? -five_s2_minus_4
                                                                 : five_s2_minus_4)
                            + " inside guard band") {}
};

/// Thrown when the eccentricity is below the configured differentiation floor.
class EccentricityFloorError : public std::domain_error {
public:
    explicit EccentricityFloorError(double e)
        : std::domain_error("eccentricity " + std::to_string(e)
                            + " below differentiation floor") {}
};

}  // namespace brouwer
