// Command-line front end: propagation runs, error-curve reproduction against
// the numerical truth, the identity verification suite, and the correction
// evaluation benchmark. All numeric CSV output is round-trip exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brouwer/angles.hpp"
#include "brouwer/checks.hpp"
#include "brouwer/config.hpp"
#include "brouwer/corrections.hpp"
#include "brouwer/genfun.hpp"
#include "brouwer/oracle.hpp"
#include "brouwer/secular.hpp"
#include "json.hpp"

namespace {

using namespace brouwer;

constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;
constexpr int kExitVerify = 4;

std::string sanitize_variant(const std::string& v) {
    std::string s = v;
    std::replace(s.begin(), s.end(), ':', '-');
    std::replace(s.begin(), s.end(), '+', 'p');
    return s;
}

FILE* open_out(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open output file \"" + path + "\"");
    return f;
}

int cmd_propagate(const RunConfig& cfg, const std::string& variant, const std::string& out_path) {
    const auto theory = cfg.theory(variant);
    const auto osc = delaunay_from_keplerian(cfg.elements, cfg.constants);
    const auto sc = initialize_theory(osc, theory);
    const auto times = cfg.sample_times();
    const auto eph = generate_ephemeris(sc, times, theory);

    FILE* f = open_out(out_path);
    std::fprintf(f, "t_s,x_km,y_km,z_km,vx_kms,vy_kms,vz_kms\n");
    for (const auto& rec : eph) {
        const auto& p = rec.state.position;
        const auto& v = rec.state.velocity;
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", rec.t, p[0], p[1],
                     p[2], v[0], v[1], v[2]);
    }
    std::fclose(f);
    std::printf("wrote %zu samples (variant %s) to %s\n", eph.size(), variant.c_str(),
                out_path.c_str());
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    const auto osc = delaunay_from_keplerian(cfg.elements, cfg.constants);
    const auto times = cfg.sample_times();
    const auto truth = integrate_trajectory(cartesian_from_delaunay(osc, cfg.constants), times,
                                            cfg.oracle_tol, cfg.constants);
    std::filesystem::create_directories(cfg.output_dir);
    std::printf("oracle: %ld steps, %ld rejected, tol %.3g\n", truth.stats.steps,
                truth.stats.rejected, truth.stats.tolerance);

    std::vector<std::pair<std::string, double>> day_end;
    for (const auto& variant : cfg.variants) {
        const auto theory = cfg.theory(variant);
        const auto sc = initialize_theory(osc, theory);
        const auto eph = generate_ephemeris(sc, times, theory);
        const auto rss = compare_rss(eph, truth);

        const auto path = cfg.output_dir + "/rss_" + sanitize_variant(variant) + ".csv";
        FILE* f = open_out(path);
        std::fprintf(f, "t_days,rss_km\n");
        for (const auto& [t, e] : rss) std::fprintf(f, "%.17g,%.17g\n", t / 86400.0, e);
        std::fclose(f);
        day_end.emplace_back(variant, rss.back().second);
        std::printf("  %-8s day-%g RSS = %.6g km  (%s)\n", variant.c_str(), cfg.days,
                    rss.back().second, path.c_str());
    }
    std::printf("summary:");
    for (const auto& [v, e] : day_end) std::printf(" %s=%.6gkm", v.c_str(), e);
    std::printf("\n");
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& out_path) {
    checks::SuiteOptions opt;
    opt.seed = cfg.seed;
    opt.states = cfg.verify_states;
    opt.constants = cfg.constants;
    opt.guards = cfg.guards;
    const auto results = checks::run_identity_suite(opt);

    nlohmann::json j = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        j.push_back({{"name", r.name},
                     {"pass", r.pass},
                     {"worst_rel_err", r.worst},
                     {"tol", r.tol},
                     {"samples", r.samples},
                     {"worst_at", r.detail}});
        all = all && r.pass;
        std::fprintf(stderr, "%-28s %s  worst=%.3e tol=%.1e n=%d\n", r.name.c_str(),
                     r.pass ? "PASS" : "FAIL", r.worst, r.tol, r.samples);
    }
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        FILE* f = open_out(out_path);
        std::fputs(text.c_str(), f);
        std::fclose(f);
    }
    return all ? 0 : kExitVerify;
}

int cmd_bench(const RunConfig& cfg, int n_states) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<DelaunayState> states;
    states.reserve(n_states);
    while (int(states.size()) < n_states) {
        const double a = 7000.0 + 18000.0 * u(rng);
        const double e = 0.01 + 0.59 * u(rng);
        const double ci = -1.0 + 2.0 * u(rng);
        if (std::abs(5.0 * (1.0 - ci * ci) - 4.0) < 0.05) continue;
        if (std::abs(3.0 * (1.0 - ci * ci) - 2.0) < 1e-3) continue;
        DelaunayState d{u(rng) * two_pi, u(rng) * two_pi, u(rng) * two_pi,
                        std::sqrt(cfg.constants.mu * a), 0.0, 0.0};
        d.G = d.L * std::sqrt(1.0 - e * e);
        d.H = d.G * ci;
        states.push_back(d);
    }

    auto timed = [&](const char* name, auto&& body) {
        using clock = std::chrono::steady_clock;
        // batch medians keep the report stable across runs
        constexpr int kBatches = 10;
        std::vector<double> per_call(kBatches);
        const int per_batch = std::max(1, n_states / kBatches);
        volatile double sink = 0.0;
        for (int b = 0; b < kBatches; ++b) {
            const auto t0 = clock::now();
            for (int i = 0; i < per_batch; ++i)
                sink = sink + body(states[(b * per_batch + i) % states.size()]);
            const auto t1 = clock::now();
            per_call[b] = std::chrono::duration<double, std::micro>(t1 - t0).count() / per_batch;
        }
        std::sort(per_call.begin(), per_call.end());
        const double median = per_call[kBatches / 2];
        double mean = 0.0;
        for (const double v : per_call) mean += v;
        mean /= kBatches;
        std::printf("%-34s mean %8.3f us  median %8.3f us  (%d calls)\n", name, mean, median,
                    per_batch * kBatches);
        return median;
    };

    const auto& c = cfg.constants;
    const auto& g = cfg.guards;
    std::printf("correction-evaluation benchmark over %d random states\n", n_states);
    const double o1 = timed("direct corrections, order 1", [&](const DelaunayState& d) {
        return mean_to_osculating(d, 1, c, g).r;
    });
    const double o2 = timed("direct corrections, order 2", [&](const DelaunayState& d) {
        return mean_to_osculating(d, 2, c, g).r;
    });
    const double ta = timed("semi-major-axis da, table path", [&](const DelaunayState& d) {
        return delta_a_first(make_chart(d, c), c);
    });
    const double ba = timed("semi-major-axis da, bracket path", [&](const DelaunayState& d) {
        const auto ch = make_jet_chart(d, c, g.eccentricity_floor);
        return poisson_bracket_value(ch.a, genfun::eval_W1(ch, c, g));
    });
    timed("inverse da2, table path", [&](const DelaunayState& d) {
        return delta_a_second_inverse(make_chart(d, c), c);
    });
    std::printf("order-2/order-1 cost ratio: %.2f\n", o2 / o1);
    std::printf("bracket/table da cost ratio: %.2f\n", ba / ta);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-transformation Brouwer main-problem propagator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string variant;
    std::string output = "ephemeris.csv";
    std::string verify_out;
    double days = -1.0;
    double tol = -1.0;
    int bench_n = 100000;

    app.add_option("--config", config_path, "JSON run configuration file");

    auto* prop = app.add_subcommand("propagate", "write an ephemeris CSV");
    prop->add_option("--variant", variant, "theory variant label I[+]:S:D");
    prop->add_option("--days", days, "propagation span [days]");
    prop->add_option("--output", output, "output CSV path");

    auto* comp = app.add_subcommand("compare", "error curves against the numerical truth");
    comp->add_option("--days", days, "propagation span [days]");
    comp->add_option("--tol", tol, "truth integrator tolerance");

    auto* veri = app.add_subcommand("verify", "run the oracle identity suite");
    veri->add_option("--output", verify_out, "write the JSON report here instead of stdout");

    auto* ben = app.add_subcommand("bench", "correction-evaluation timings");
    ben->add_option("--n", bench_n, "number of random evaluation states");

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
        if (days >= 0.0) cfg.days = days;
        if (tol > 0.0) cfg.oracle_tol = tol;
        cfg.validate();
        if (variant.empty()) variant = cfg.variants.front();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    }

    try {
        if (prop->parsed()) return cmd_propagate(cfg, variant, output);
        if (comp->parsed()) return cmd_compare(cfg);
        if (veri->parsed()) return cmd_verify(cfg, verify_out);
        if (ben->parsed()) return cmd_bench(cfg, bench_n);
    } catch (const CriticalInclinationError& e) {
        std::fprintf(stderr, "guard violation: %s\n", e.what());
        return kExitGuard;
    } catch (const EccentricityFloorError& e) {
        std::fprintf(stderr, "guard violation: %s\n", e.what());
        return kExitGuard;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
