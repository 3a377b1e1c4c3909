#include "brouwer/secular.hpp"

#include <cmath>
#include <stdexcept>

#include "brouwer/angles.hpp"

namespace brouwer {

void TheoryConfig::validate() const {
    if (inverse_order < 0 || inverse_order > 2)
        throw std::domain_error("TheoryConfig: inverse_order must be in [0,2]");
    if (secular_order < 1 || secular_order > 3)
        throw std::domain_error("TheoryConfig: secular_order must be in [1,3]");
    if (direct_order < 0 || direct_order > 2)
        throw std::domain_error("TheoryConfig: direct_order must be in [0,2]");
    constants.validate();
}

TheoryConfig TheoryConfig::from_variant(const std::string& label,
                                        const PhysicalConstants& c, const TheoryGuards& g) {
    TheoryConfig cfg;
    cfg.constants = c;
    cfg.guards = g;
    const auto bad = [&] {
        return std::domain_error("variant label must look like \"I[+]:S:D\", got \"" + label + "\"");
    };
    const auto c1 = label.find(':');
    const auto c2 = label.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
    std::string inv = label.substr(0, c1);
    const std::string sec = label.substr(c1 + 1, c2 - c1 - 1);
    const std::string dir = label.substr(c2 + 1);
    if (!inv.empty() && inv.back() == '+') {
        cfg.calibrate = true;
        inv.pop_back();
    }
    try {
        std::size_t used = 0;
        cfg.inverse_order = std::stoi(inv, &used);
        if (used != inv.size()) throw bad();
        cfg.secular_order = std::stoi(sec, &used);
        if (used != sec.size()) throw bad();
        cfg.direct_order = std::stoi(dir, &used);
        if (used != dir.size()) throw bad();
    } catch (const std::invalid_argument&) {
        throw bad();
    }
    if (cfg.calibrate) cfg.secular_order = std::min(cfg.secular_order + 1, 3);
    cfg.validate();
    return cfg;
}

std::string TheoryConfig::variant_label() const {
    const int sec = calibrate ? std::max(secular_order - 1, 1) : secular_order;
    return std::to_string(inverse_order) + (calibrate ? "+" : "") + ":"
           + std::to_string(sec) + ":" + std::to_string(direct_order);
}

double calibrate_L(double epoch_energy, double L, double G, double H, int order,
                   const PhysicalConstants& c, const TheoryGuards& guards,
                   const CoefficientTables& tables) {
    double radicand = -epoch_energy;
    static constexpr double kFact[4] = {1.0, 1.0, 2.0, 6.0};
    double j2m = 1.0;
    for (int m = 1; m <= order; ++m) {
        j2m *= c.j2;
        radicand += j2m / kFact[m] * eval_secular_term(m, L, G, H, c, guards, tables);
    }
    if (!(radicand > 0.0))
        throw std::domain_error("calibrate_L: nonpositive energy radicand");
    return c.mu / std::sqrt(2.0 * radicand);
}

SecularConstants initialize_theory(const DelaunayState& osculating, const TheoryConfig& cfg,
                                   const CoefficientTables& tables) {
    cfg.validate();
    osculating.validate();
    SecularConstants sc;
    sc.mean_epoch = osculating_to_mean(osculating, cfg.inverse_order, cfg.constants,
                                       cfg.guards, tables);
    sc.epoch_energy = eval_osculating_hamiltonian(osculating, cfg.constants);
    const auto& m = sc.mean_epoch;
    sc.Lhat = cfg.calibrate
                  ? calibrate_L(sc.epoch_energy, m.L, m.G, m.H, cfg.secular_order,
                                cfg.constants, cfg.guards, tables)
                  : m.L;
    sc.rates = secular_frequencies(sc.Lhat, m.L, m.G, m.H, cfg.secular_order,
                                   cfg.constants, cfg.guards, tables);
    return sc;
}

DelaunayState propagate_mean(const SecularConstants& sc, double t) {
    DelaunayState d = sc.mean_epoch;
    d.l = wrap_two_pi(d.l + sc.rates.n_l * t);
    d.g = wrap_two_pi(d.g + sc.rates.n_g * t);
    d.h = wrap_two_pi(d.h + sc.rates.n_h * t);
    return d;
}

std::vector<EphemerisRecord> generate_ephemeris(const SecularConstants& sc,
                                                std::span<const double> times,
                                                const TheoryConfig& cfg,
                                                const CoefficientTables& tables) {
    std::vector<EphemerisRecord> out;
    out.reserve(times.size());
    for (const double t : times) {
        const DelaunayState mean = propagate_mean(sc, t);
        const PolarNodalState osc = mean_to_osculating(mean, cfg.direct_order,
                                                       cfg.constants, cfg.guards, tables);
        out.push_back({t, cartesian_from_polar_nodal(osc)});
    }
    return out;
}

}  // namespace brouwer
