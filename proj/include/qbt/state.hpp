// state.hpp — Bloch vectors, density matrices and the exact qubit algebra
//
// Conventions used across the library:
//   * hbar = k_B = 1. Energies are measured in units of the field modulus
//     epsilon and times in units of 1/gamma0.
//   * Basis index 0 is the ground state |g> (the +v pole of the Bloch sphere,
//     energy -epsilon); index 1 is the excited state |e>.
//   * Two-qubit states use the tensor ordering A (x) B, index = 2*a + b.

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qbt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

/// Fixed unit conventions. Read-only by construction.
struct UnitSystem {
    static constexpr double hbar = 1.0;
    static constexpr double k_B = 1.0;
};

/// Raised when an input state or field is not physical.
class PhysicalityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kBlochSlack = 1e-9;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;

/// Qubit state as a Bloch vector. |B| <= 1 + 1e-9 is enforced on construction.
class BlochState {
public:
    BlochState() = default;
    BlochState(double bx, double by, double bz);
    explicit BlochState(const Vec3& b);

    const Vec3& vector() const { return b_; }
    double x() const { return b_.x(); }
    double y() const { return b_.y(); }
    double z() const { return b_.z(); }
    double modulus() const { return b_.norm(); }

    /// Unit vector along B; absent for the maximally mixed state.
    std::optional<Vec3> direction() const;

private:
    Vec3 b_{Vec3::Zero()};
};

/// Effective magnetic field v defining H = -v.sigma. epsilon = |v| must be > 0.
class EffectiveField {
public:
    EffectiveField(double vx, double vy, double vz);
    explicit EffectiveField(const Vec3& v);

    /// Field of modulus eps along +z.
    static EffectiveField along_z(double eps) { return EffectiveField(0.0, 0.0, eps); }

    const Vec3& vector() const { return v_; }
    double epsilon() const { return eps_; }
    Vec3 direction() const { return v_ / eps_; }

private:
    Vec3 v_;
    double eps_;
};

enum class Subsystem { A, B };

// Pauli matrices and single-qubit ladder operators in the |g>,|e> basis.
ComplexMatrix identity(int dim);
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
/// |g><e|: takes the excited state to the ground state.
ComplexMatrix lowering();
/// |e><g|
ComplexMatrix raising();
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// H = -v.sigma
ComplexMatrix qubit_hamiltonian(const Vec3& v);

/// Empty string when the matrix is Hermitian within tol, otherwise a description.
std::string hermiticity_violation(const ComplexMatrix& m, double tol = kHermitianTol);
/// Empty string when m is a valid density matrix (dim 2 or 4, Hermitian,
/// unit trace, eigenvalues >= -1e-9), otherwise a description.
std::string density_violation(const ComplexMatrix& m);
/// Throws PhysicalityError when density_violation is non-empty.
void require_density(const ComplexMatrix& m);

/// rho = (I + B.sigma) / 2
ComplexMatrix bloch_to_density(const BlochState& b);
/// Inverse of bloch_to_density. Rejects non-Hermitian or non-unit-trace input.
BlochState density_to_bloch(const ComplexMatrix& rho);
/// (tr(M sx), tr(M sy), tr(M sz)) without validation; used for derivatives.
Vec3 pauli_expectations(const ComplexMatrix& m);

/// E = -B.v
double internal_energy(const BlochState& b, const EffectiveField& v);

/// Sum of |rho_ij|, i != j, with rho expressed in the eigenbasis of H(v).
double l1_coherence(const ComplexMatrix& rho, const EffectiveField& v);

ComplexMatrix partial_trace(const ComplexMatrix& rho_ab, Subsystem keep);

struct PolarAngles {
    double modulus;
    std::optional<double> theta; ///< absent when B = 0
    double phi;                  ///< 0 at the poles
};

/// Spherical coordinates of B with the polar axis along v.
PolarAngles polar_angles(const BlochState& b, const EffectiveField& v);

/// Right-handed orthonormal frame (e1, e2, v_hat) completing the field direction.
struct FieldFrame {
    Vec3 e1, e2, axis;
};
FieldFrame field_frame(const EffectiveField& v);

} // namespace qbt
