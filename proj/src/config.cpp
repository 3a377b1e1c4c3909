#include "brouwer/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "brouwer/angles.hpp"
#include "json.hpp"

namespace brouwer {

using nlohmann::json;

void RunConfig::validate() const {
    constants.validate();
    elements.validate();
    if (!(days >= 0.0)) throw std::domain_error("config: days must be >= 0");
    if (!(output_step > 0.0)) throw std::domain_error("config: output_step_s must be positive");
    if (!(oracle_tol >= 1e-14 && oracle_tol <= 1e-9))
        throw std::domain_error("config: oracle_tol must be in [1e-14, 1e-9]");
    if (variants.empty()) throw std::domain_error("config: variants must not be empty");
    for (const auto& v : variants) TheoryConfig::from_variant(v, constants, guards);
    if (verify_states < 1) throw std::domain_error("config: verify_states must be positive");
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config: JSON parse error: ") + e.what());
    }
    RunConfig cfg;

    const std::set<std::string> known{
        "mu_km3_s2", "re_km", "j2", "critical_inclination_band", "eccentricity_floor",
        "elements", "variants", "days", "output_step_s", "oracle_tol", "seed",
        "verify_states", "output_dir"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw std::runtime_error("config: unknown key \"" + key + "\"");

    if (j.contains("mu_km3_s2")) cfg.constants.mu = j["mu_km3_s2"].get<double>();
    if (j.contains("re_km")) cfg.constants.re = j["re_km"].get<double>();
    if (j.contains("j2")) cfg.constants.j2 = j["j2"].get<double>();
    if (j.contains("critical_inclination_band"))
        cfg.guards.critical_inclination_band = j["critical_inclination_band"].get<double>();
    if (j.contains("eccentricity_floor"))
        cfg.guards.eccentricity_floor = j["eccentricity_floor"].get<double>();

    if (j.contains("elements")) {
        const auto& e = j["elements"];
        const std::set<std::string> ek{"a_km", "e", "inc_deg", "raan_deg", "argp_deg",
                                       "mean_anomaly_deg"};
        for (const auto& [key, _] : e.items())
            if (!ek.count(key))
                throw std::runtime_error("config: unknown elements key \"" + key + "\"");
        auto need = [&](const char* k) -> double {
            if (!e.contains(k))
                throw std::runtime_error(std::string("config: elements missing \"") + k + "\"");
            return e[k].get<double>();
        };
        cfg.elements.a = need("a_km");
        cfg.elements.e = need("e");
        cfg.elements.inc = deg2rad(need("inc_deg"));
        cfg.elements.raan = deg2rad(need("raan_deg"));
        cfg.elements.argp = deg2rad(need("argp_deg"));
        cfg.elements.ml = deg2rad(need("mean_anomaly_deg"));
    }
    if (j.contains("variants")) cfg.variants = j["variants"].get<std::vector<std::string>>();
    if (j.contains("days")) cfg.days = j["days"].get<double>();
    if (j.contains("output_step_s")) cfg.output_step = j["output_step_s"].get<double>();
    if (j.contains("oracle_tol")) cfg.oracle_tol = j["oracle_tol"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("verify_states")) cfg.verify_states = j["verify_states"].get<int>();
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();

    cfg.validate();
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::vector<double> RunConfig::sample_times() const {
    std::vector<double> t;
    const double tend = days * 86400.0;
    for (double x = 0.0; x <= tend + 1e-9; x += output_step) t.push_back(x);
    if (t.empty()) t.push_back(0.0);
    return t;
}

TheoryConfig RunConfig::theory(const std::string& variant) const {
    return TheoryConfig::from_variant(variant, constants, guards);
}

}  // namespace brouwer
