#include "brouwer/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "dop853_tableau.hpp"

namespace brouwer {

Vec3 main_problem_acceleration(const Vec3& position, const PhysicalConstants& c) {
    const double x = position[0], y = position[1], z = position[2];
    const double r2 = x * x + y * y + z * z;
    if (!(r2 > 0.0)) throw std::domain_error("main_problem_acceleration: zero radius");
    const double r = std::sqrt(r2);
    const double k = -c.mu / (r2 * r);
    const double fac = 1.5 * c.j2 * c.mu * c.re * c.re / (r2 * r2 * r);
    const double z2r2 = 5.0 * z * z / r2;
    return {k * x - fac * x * (1.0 - z2r2),
            k * y - fac * y * (1.0 - z2r2),
            k * z - fac * z * (3.0 - z2r2)};
}

namespace {

using State6 = std::array<double, 6>;

State6 rhs(const State6& y, const PhysicalConstants& c) {
    const Vec3 a = main_problem_acceleration({y[0], y[1], y[2]}, c);
    return {y[3], y[4], y[5], a[0], a[1], a[2]};
}

double error_norm(const State6& e5, const State6& e3, const State6& y0, const State6& y1,
                  double atol, double rtol) {
    double n5 = 0.0, n3 = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double a = e5[i] / sc, b = e3[i] / sc;
        n5 += a * a;
        n3 += b * b;
    }
    if (n5 == 0.0 && n3 == 0.0) return 0.0;
    double denom = n5 + 0.01 * n3;
    if (denom <= 0.0) denom = 1.0;
    return std::abs(n5) * std::sqrt(1.0 / (6.0 * denom));
}

}  // namespace

Trajectory integrate_trajectory(const CartesianState& x0, std::span<const double> times,
                                double tol, const PhysicalConstants& c) {
    if (!(tol >= 1e-14 && tol <= 1e-9))
        throw std::domain_error("integrate_trajectory: tol must be in [1e-14, 1e-9]");
    if (times.empty()) throw std::domain_error("integrate_trajectory: no sample times");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::domain_error("integrate_trajectory: times must be increasing");

    const double rtol = tol;
    const double atol = tol * 1e-3;

    Trajectory out;
    out.stats.tolerance = tol;
    out.t.assign(times.begin(), times.end());
    out.states.reserve(times.size());

    State6 y{x0.position[0], x0.position[1], x0.position[2],
             x0.velocity[0], x0.velocity[1], x0.velocity[2]};
    double t = 0.0;
    double tc = 0.0;  // Kahan compensation for the time sum
    State6 k[dop853::kStages];
    State6 f0 = rhs(y, c);
    ++out.stats.rhs_evaluations;
    double h = 1.0;

    // A step clamped to land on a sample time reaches it up to ULP-level
    // accumulation noise; snap and emit within 1e-6 s (samples are >= 1 s apart).
    auto emit_if_sampled = [&](std::size_t& next) {
        while (next < times.size() && std::abs(t - times[next]) <= 1e-6) {
            t = times[next];
            tc = 0.0;
            out.states.push_back({{y[0], y[1], y[2]}, {y[3], y[4], y[5]}});
            ++next;
        }
    };

    std::size_t next = 0;
    if (!(times[0] >= 0.0))
        throw std::domain_error("integrate_trajectory: times must start at t >= 0");
    if (times[0] == 0.0) emit_if_sampled(next);

    while (next < times.size()) {
        const double target = times[next];
        double step = std::min(h, target - t);
        if (step <= 0.0) step = h;

        // one attempted DOP853 step of size `step`
        k[0] = f0;
        for (int s = 1; s < dop853::kStages; ++s) {
            State6 ys;
            for (int i = 0; i < 6; ++i) {
                double acc = 0.0;
                for (int j = 0; j < s; ++j) acc += dop853::kA[s][j] * k[j][i];
                ys[i] = y[i] + step * acc;
            }
            k[s] = rhs(ys, c);
        }
        out.stats.rhs_evaluations += dop853::kStages - 1;

        State6 y1;
        State6 e5{}, e3{};
        for (int i = 0; i < 6; ++i) {
            double acc = 0.0, a5 = 0.0, a3 = 0.0;
            for (int s = 0; s < dop853::kStages; ++s) {
                acc += dop853::kB[s] * k[s][i];
                a5 += dop853::kE5[s] * k[s][i];
                a3 += dop853::kE3[s] * k[s][i];
            }
            y1[i] = y[i] + step * acc;
            e5[i] = step * a5;
            e3[i] = step * a3;
        }
        const double err = error_norm(e5, e3, y, y1, atol, rtol);

        if (err <= 1.0) {
            // accept
            y = y1;
            const double dt = step - tc;
            const double tn = t + dt;
            tc = (tn - t) - dt;
            t = tn;
            f0 = rhs(y, c);
            ++out.stats.rhs_evaluations;
            ++out.stats.steps;
            emit_if_sampled(next);
            const double factor = err == 0.0 ? 10.0
                                             : std::clamp(0.9 * std::pow(err, -1.0 / 8.0), 0.2, 10.0);
            h = step * factor;
            if (h <= 0.0 || !std::isfinite(h))
                throw std::runtime_error("integrate_trajectory: step size underflow");
        } else {
            ++out.stats.rejected;
            h = step * std::clamp(0.9 * std::pow(err, -1.0 / 8.0), 0.2, 1.0);
            if (h < 1e-12)
                throw std::runtime_error("integrate_trajectory: step size underflow");
        }
    }
    return out;
}

std::vector<std::pair<double, double>> compare_rss(std::span<const EphemerisRecord> analytic,
                                                   const Trajectory& truth) {
    if (analytic.size() != truth.states.size())
        throw std::invalid_argument("compare_rss: sample counts differ");
    std::vector<std::pair<double, double>> out;
    out.reserve(analytic.size());
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        if (std::abs(analytic[i].t - truth.t[i]) > 1e-6)
            throw std::invalid_argument("compare_rss: time grids differ");
        const auto& a = analytic[i].state.position;
        const auto& b = truth.states[i].position;
        const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
        out.emplace_back(truth.t[i], std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    return out;
}

}  // namespace brouwer
