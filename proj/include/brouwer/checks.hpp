#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brouwer/constants.hpp"
#include "brouwer/tables.hpp"

namespace brouwer::checks {

/// Outcome of one oracle cross-check.
struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;    ///< worst-case relative error observed
    double tol = 0.0;
    int samples = 0;
    std::string detail;    ///< where the worst case occurred
};

struct SuiteOptions {
    std::uint64_t seed = 20250811;
    int states = 1000;          ///< sample count for pointwise identities
    int quadrature_states = 20; ///< sample count for averaged identities
    int nested_states = 6;      ///< sample count for nested-bracket averages
    PhysicalConstants constants{};
    TheoryGuards guards{};
};

/// Gauss-Legendre nodes and weights on [a, b].
std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b);

/// Run every identity that cross-checks the printed series against the
/// bracket engine and the averaging rules against quadrature.
std::vector<CheckResult> run_identity_suite(const SuiteOptions& opt,
                                            const CoefficientTables& tables = CoefficientTables::builtin());

}  // namespace brouwer::checks
