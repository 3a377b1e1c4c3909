#pragma once

#include <span>
#include <string>
#include <vector>

#include "brouwer/constants.hpp"
#include "brouwer/corrections.hpp"
#include "brouwer/hamiltonian.hpp"

namespace brouwer {

/// Truncation-order configuration of the propagation theory.
struct TheoryConfig {
    int inverse_order = 2;    ///< order of the osculating->mean corrections (0-2)
    int secular_order = 2;    ///< order of the secular terms/frequencies (1-3)
    int direct_order = 2;     ///< order of the mean->osculating corrections (0-2)
    bool calibrate = false;   ///< Breakwell-Vagners energy calibration of L'
    PhysicalConstants constants{};
    TheoryGuards guards{};

    void validate() const;

    /// Variant label "I[+]:S:D". The '+' mark requests the calibrated
    /// initialization, which also raises the secular order by one (capped
    /// at 3): the extra secular term and the calibration only help together.
    static TheoryConfig from_variant(const std::string& label,
                                     const PhysicalConstants& c = {},
                                     const TheoryGuards& g = {});
    std::string variant_label() const;
};

/// Frozen epoch output of theory initialization.
struct SecularConstants {
    DelaunayState mean_epoch{};      ///< mean Delaunay elements at t = 0
    double Lhat = 0.0;               ///< calibrated (or copied) Delaunay action
    SecularFrequencies rates{};      ///< secular angle rates
    double epoch_energy = 0.0;       ///< osculating Hamiltonian at epoch
};

/// Calibrated Delaunay action from the energy equation:
/// Lhat = mu / sqrt(2 [-E0 + sum_{m<=k} (J2^m/m!) H0m(L', G', H)]).
double calibrate_L(double epoch_energy, double L, double G, double H, int order,
                   const PhysicalConstants& c, const TheoryGuards& guards = {},
                   const CoefficientTables& tables = CoefficientTables::builtin());

/// Inverse corrections at inverse_order, optional calibration, frequencies
/// at secular_order.
SecularConstants initialize_theory(const DelaunayState& osculating, const TheoryConfig& cfg,
                                   const CoefficientTables& tables = CoefficientTables::builtin());

/// Linear flow of the mean elements.
DelaunayState propagate_mean(const SecularConstants& sc, double t);

/// Time-tagged Cartesian state with provenance.
struct EphemerisRecord {
    double t = 0.0;
    CartesianState state{};
};

/// propagate_mean -> direct corrections -> Cartesian, per sample time.
std::vector<EphemerisRecord> generate_ephemeris(const SecularConstants& sc,
                                                std::span<const double> times,
                                                const TheoryConfig& cfg,
                                                const CoefficientTables& tables = CoefficientTables::builtin());

}  // namespace brouwer
