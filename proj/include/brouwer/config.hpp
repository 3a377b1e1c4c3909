#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brouwer/angles.hpp"
#include "brouwer/constants.hpp"
#include "brouwer/elements.hpp"
#include "brouwer/secular.hpp"

namespace brouwer {

/// A fully validated propagation run. Parsed from a JSON config file;
/// unknown keys are rejected. Defaults describe the Topex-type test orbit.
struct RunConfig {
    PhysicalConstants constants{};
    TheoryGuards guards{};
    KeplerianSet elements{7707.270, 1.0e-4, deg2rad(66.04), deg2rad(180.001),
                          deg2rad(270.0), deg2rad(180.0)};
    std::vector<std::string> variants{"1:2:1", "1+:2:1", "2:2:2", "2+:2:2"};
    double days = 30.0;
    double output_step = 300.0;       ///< [s]
    double oracle_tol = 1.0e-13;
    std::uint64_t seed = 20250811;
    int verify_states = 1000;
    std::string output_dir = ".";

    void validate() const;

    /// Parse a JSON document; throws std::runtime_error naming the offender.
    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_file(const std::string& path);

    std::vector<double> sample_times() const;
    TheoryConfig theory(const std::string& variant) const;
};

}  // namespace brouwer
