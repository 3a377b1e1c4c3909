#include "brouwer/config.hpp"

#include <cmath>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace brouwer;
using brouwer::testing::rel_err;

TEST_CASE("config defaults describe the shipped example") {
    RunConfig cfg;
    cfg.validate();
    CHECK(cfg.elements.a == doctest::Approx(7707.270));
    CHECK(cfg.variants.size() == 4);
    CHECK(cfg.days == 30.0);
}

TEST_CASE("config parsing") {
    SUBCASE("full document") {
        const auto cfg = RunConfig::from_json_text(R"({
            "mu_km3_s2": 398600.5,
            "j2": 1.0e-3,
            "elements": {"a_km": 8000.0, "e": 0.02, "inc_deg": 45.0,
                         "raan_deg": 10.0, "argp_deg": 20.0, "mean_anomaly_deg": 30.0},
            "variants": ["2:2:2"],
            "days": 3.5,
            "output_step_s": 120.0,
            "oracle_tol": 1.0e-12,
            "seed": 99
        })");
        CHECK(cfg.constants.mu == 398600.5);
        CHECK(cfg.elements.a == 8000.0);
        CHECK(cfg.elements.inc == doctest::Approx(std::numbers::pi / 4.0));
        CHECK(cfg.days == 3.5);
        CHECK(cfg.seed == 99);
        CHECK(cfg.sample_times().size() == std::size_t(3.5 * 86400.0 / 120.0) + 1);
    }
    SUBCASE("unknown keys rejected") {
        CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"({"tolerance": 1e-9})"),
                             doctest::Contains("unknown key"), std::runtime_error);
        CHECK_THROWS_WITH_AS(
            RunConfig::from_json_text(R"({"elements": {"a_km": 1.0, "sma": 2.0}})"),
            doctest::Contains("unknown elements key"), std::runtime_error);
    }
    SUBCASE("incomplete elements rejected") {
        CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"({"elements": {"a_km": 8000.0}})"),
                             doctest::Contains("missing"), std::runtime_error);
    }
    SUBCASE("malformed JSON rejected") {
        CHECK_THROWS_WITH_AS(RunConfig::from_json_text("{"), doctest::Contains("parse"),
                             std::runtime_error);
    }
    SUBCASE("domain violations rejected") {
        CHECK_THROWS_AS(RunConfig::from_json_text(R"({"oracle_tol": 1.0e-6})"),
                        std::domain_error);
        CHECK_THROWS_AS(RunConfig::from_json_text(R"({"days": -1.0})"), std::domain_error);
        CHECK_THROWS_AS(RunConfig::from_json_text(R"({"variants": ["9:9:9"]})"),
                        std::domain_error);
    }
}

TEST_CASE("theory construction from config") {
    RunConfig cfg;
    cfg.constants.j2 = 2.0e-3;
    const auto t = cfg.theory("2+:2:2");
    CHECK(t.constants.j2 == 2.0e-3);
    CHECK(t.calibrate);
    CHECK(t.secular_order == 3);
}
