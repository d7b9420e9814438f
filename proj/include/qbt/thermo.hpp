// thermo.hpp — qubit heat, work, temperature, heat capacity and entropy production
//
// Two partitions of the energy change dE of a qubit with E = -B.v are
// provided:
//
//   Alicki (state change is heat):   dQ1 = -dB.v        dW1 = -B.dv
//   Entropic (eigenvalue change is heat):
//                                    dQ2 = -dB (B^.v)   dW2 = -B d(B^.v)
//
// where B = |B| and B^ = B/|B|. dW2 - dW1 = -B dB^.v is the work spent
// rotating the Bloch vector against the field.

#pragma once

#include <optional>

#include "qbt/marked_value.hpp"
#include "qbt/spectrum.hpp"
#include "qbt/state.hpp"

namespace qbt {

enum class Paradigm { alicki, entropic };

/// Bloch moduli above this are treated as pure states in closed forms that
/// contain arctanh(B).
inline constexpr double kPureStateTol = 1e-12;
/// |B^.v^| below this is treated as exactly orthogonal to the field.
inline constexpr double kOrthogonalTol = 1e-12;

struct AlickiRates {
    double heat;
    double work;
};

struct EntropicRates {
    double heat;
    double work;
    double rotational_work; ///< work - Alicki work
    bool spectral_fallback; ///< B = 0: resolved through the spectral form
};

struct SpectralRates {
    double heat;
    double work;
    Degeneracy degeneracy;
};

/// q1 = -dB/dt . v, w1 = -B . dv/dt
AlickiRates p1_rates(const BlochState& b, const Vec3& bdot, const EffectiveField& v, const Vec3& vdot);

/// q2 = -(dB/dt)(B^.v) with dB/dt = B.Bdot/B; w2 = dE/dt - q2.
EntropicRates p2_rates_bloch(const BlochState& b, const Vec3& bdot, const EffectiveField& v, const Vec3& vdot);

/// q2 = sum_j <psi_j|rhodot|psi_j> <psi_j|H|psi_j>, w2 = tr(Hdot rho) + tr(H rhodot) - q2,
/// in the eigenbasis of rho (degenerate eigenspaces resolved by rhodot).
/// Empty for a 4x4 state whose degeneracy survives the rhodot resolution.
std::optional<SpectralRates> p2_rates_spectral(const ComplexMatrix& rho, const ComplexMatrix& rhodot,
                                               const ComplexMatrix& H, const ComplexMatrix& Hdot);

/// d|B|/dt = B^.Bdot (0 at B = 0).
double bloch_modulus_rate(const BlochState& b, const Vec3& bdot);

/// d(theta)/dt at fixed field; 0 at the poles and at B = 0.
double polar_angle_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v);

/// -B dB^/dt . v
double rotational_work_direct(const BlochState& b, const Vec3& bdot, const EffectiveField& v);

/// Lever-arm form C_l1 * eps * dtheta/dt, with C_l1 evaluated on the density matrix.
double rotational_work_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v);

/// Torque form -(B x v) . e_phi dtheta/dt.
double torque_work_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v);

/// eps / (k_B (B^.v^) arctanh B); infinite at B = 0, undefined on the
/// orthogonal plane, zero for other pure states.
MarkedValue temperature_p1(const BlochState& b, const EffectiveField& v);

/// eps (B^.v^) / (k_B arctanh B); infinite at B = 0, zero for pure states
/// and on the orthogonal plane.
MarkedValue temperature_p2(const BlochState& b, const EffectiveField& v);

/// Alicki-paradigm heat capacity exactly as printed in the literature, with
/// B.v^ the full projection B cos(theta). At incoherent states this is B
/// times the equilibrium two-level curve; see heat_capacity_fd.
MarkedValue heat_capacity_p1(const BlochState& b, const EffectiveField& v);

/// k_B [x / cosh x]^2 with x = (B^.v)/(k_B T) = arctanh B.
MarkedValue heat_capacity_p2(const BlochState& b, const EffectiveField& v);

/// Central difference dE/dT along the path that scales |B| with B^ and v
/// fixed, using the paradigm's temperature. `step` is the absolute change in
/// |B|, shrunk if needed to stay inside (0, 1).
MarkedValue heat_capacity_fd(const BlochState& b, const EffectiveField& v, Paradigm paradigm, double step = 1e-5);

/// -k_B arctanh(B) [B^ - (v^.B^) v^] . dB/dt
MarkedValue entropy_production_p1_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v);

/// dS/dt = -k_B arctanh(B) dB/dt from the closed-form qubit entropy.
MarkedValue entropy_rate_bloch(const BlochState& b, const Vec3& bdot);

/// q (1/T_sys - 1/T_env). Undefined unless both temperatures are finite and nonzero.
MarkedValue boundary_entropy_rate(double q_rate, const MarkedValue& T_sys, double T_env);

/// tanh(eps / k_B T_env) v^; v^ at T_env = 0 and 0 at T_env = infinity.
BlochState equilibrium_bloch(double T_env, const EffectiveField& v);

} // namespace qbt
