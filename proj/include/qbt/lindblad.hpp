// lindblad.hpp — Markovian generators for the qubit and two-qubit scenarios

#pragma once

#include <string>
#include <vector>

#include "qbt/state.hpp"

namespace qbt {

/// Whether the free Hamiltonian H = -v.sigma is kept in the generator.
/// The thermodynamic rates are identical in both pictures because free
/// precession about v leaves |B|, B.v and the angle to v unchanged.
enum class Picture { interaction, schrodinger };

struct JumpChannel {
    ComplexMatrix op;
    double rate;
    std::string label;
};

/// rho' = -i[H, rho] + sum_k rate_k (L_k rho L_k^+ - {L_k^+ L_k, rho}/2)
class LindbladModel {
public:
    LindbladModel(ComplexMatrix hamiltonian, std::vector<JumpChannel> jumps, std::string label);

    int dim() const { return static_cast<int>(hamiltonian_.rows()); }
    const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
    const std::vector<JumpChannel>& jumps() const { return jumps_; }
    const std::string& label() const { return label_; }

    ComplexMatrix rhs(const ComplexMatrix& rho) const;

private:
    ComplexMatrix hamiltonian_;
    std::vector<JumpChannel> jumps_;
    std::vector<ComplexMatrix> decay_; // L^+ L per channel
    std::string label_;
};

inline ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho) {
    return model.rhs(rho);
}

/// Mean photon number 1/(exp(x) - 1) at x = hbar*omega0/(k_B T_E).
/// x = +infinity (T_E = 0) gives 0; x <= 0 throws std::invalid_argument.
double planck_occupation(double beta_h_omega0);

/// Two-level atom in a thermal field: emission (|e> -> |g>) at gamma0 (N + 1)
/// and absorption at gamma0 N, with N the occupation at hbar*omega0 = 2 eps.
/// The absorption channel is omitted at T_env = 0.
LindbladModel thermal_bath_model(double gamma0, double T_env, double eps,
                                 Picture picture = Picture::interaction);

/// Pure dephasing: sigma_z at rate gamma_phi/2, so energy-basis coherences
/// decay as exp(-gamma_phi t) and populations are frozen.
LindbladModel dephasing_model(double gamma_phi, double eps,
                              Picture picture = Picture::interaction);

/// Two atoms in a common zero-temperature field with gamma_AA = gamma_BB =
/// gamma0 and gamma_AB = gamma_BA = g gamma0. The 2x2 rate matrix is
/// diagonalized into symmetric and antisymmetric collective decay channels
/// (L_A +/- L_B)/sqrt(2) with rates gamma0 (1 +/- g).
LindbladModel two_atom_model(double gamma0, double g, double eps);

/// Purely Hamiltonian excitation exchange J (raise_A lower_B + lower_A raise_B).
LindbladModel exchange_unitary_model(double J);

} // namespace qbt
