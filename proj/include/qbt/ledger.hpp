// ledger.hpp — thermodynamic bookkeeping along sampled trajectories

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbt/integrator.hpp"
#include "qbt/marked_value.hpp"
#include "qbt/thermo.hpp"

namespace qbt {

inline constexpr double kRateClosureTol = 1e-10;
inline constexpr double kCumulativeClosureTol = 1e-5;
inline constexpr double kClausiusTol = 1e-5;

/// v(t) = initial + ramp * t. A nonzero ramp is only meaningful for
/// bookkeeping tests of driven (Alicki) work.
struct FieldProtocol {
    Vec3 initial{0.0, 0.0, 1.0};
    Vec3 ramp{Vec3::Zero()};

    EffectiveField at(double t) const { return EffectiveField(initial + ramp * t); }
};

struct EnvironmentSpec {
    std::optional<double> T_env; ///< k_B T_E / eps; absent when no bath temperature applies
};

struct ThermoSample {
    double t = 0.0;
    Vec3 bloch{Vec3::Zero()};
    double modulus = 0.0;
    MarkedValue theta = MarkedValue::undefined();
    double energy = 0.0;
    double entropy = 0.0;
    double energy_rate = 0.0; ///< tr(Hdot rho) + tr(H rhodot)
    double q1_rate = 0.0;
    double w1_rate = 0.0;
    double q2_rate = 0.0;
    double w2_rate = 0.0;
    double wprime_rate = 0.0;
    double coherence = 0.0;
    MarkedValue temp1 = MarkedValue::undefined();
    MarkedValue temp2 = MarkedValue::undefined();
    MarkedValue cap1 = MarkedValue::undefined();
    MarkedValue cap2 = MarkedValue::undefined();
    MarkedValue sgen1_rate = MarkedValue::undefined();
    MarkedValue sgen_ht_rate = MarkedValue::undefined();
    bool spectral_fallback = false; ///< q2 obtained from the spectral form (B = 0)
};

struct LedgerAudit {
    std::string name;
    bool applicable = true;
    bool passed = true;
    double residual = 0.0;  ///< worst cumulative residual
    double tolerance = 0.0;
    double rate_residual = 0.0;
    double worst_time = 0.0;
    std::string note;
};

struct ThermoLedger {
    std::string label;
    std::optional<double> T_env;
    std::vector<ThermoSample> samples;
    // Trapezoid integrals, aligned with samples (first entry 0).
    std::vector<double> Q1, W1, Q2, W2, Wprime, Sgen1, Sgen_ht;
    std::vector<LedgerAudit> audits;

    bool passed() const;
    double delta_energy() const;
    double delta_entropy() const;
    const LedgerAudit* audit(const std::string& name) const;
};

/// Builds the per-sample thermodynamics of a qubit trajectory (or of one
/// qubit of a two-qubit trajectory, via partial traces of rho and rhodot),
/// integrates the cumulative quantities and runs the first-law and
/// entropic Clausius audits.
ThermoLedger annotate_trajectory(const Trajectory& traj, const FieldProtocol& field, const EnvironmentSpec& env,
                                 std::optional<Subsystem> subsystem = std::nullopt);

} // namespace qbt
