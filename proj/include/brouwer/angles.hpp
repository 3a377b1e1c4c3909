#pragma once

#include <cmath>
#include <numbers>

namespace brouwer {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double a) {
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

/// Reduce an angle to (-pi, pi].
inline double wrap_pi(double a) {
    double r = std::fmod(a, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    else if (r > std::numbers::pi) r -= two_pi;
    return r;
}

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

}  // namespace brouwer
