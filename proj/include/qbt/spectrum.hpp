// spectrum.hpp — Hermitian eigendecomposition and von Neumann entropy

#pragma once

#include <stdexcept>

#include "qbt/state.hpp"

namespace qbt {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Degeneracy {
    none,       ///< all eigenvalues separated
    resolved,   ///< degenerate eigenspaces fixed by diagonalizing the hint there
    unresolved, ///< arbitrary orthonormal basis inside a degenerate eigenspace
};

/// Eigenvalues in descending order with orthonormal eigenvector columns.
struct Spectrum {
    Eigen::VectorXd values;
    ComplexMatrix vectors;
    Degeneracy degeneracy{Degeneracy::none};

    int dim() const { return static_cast<int>(values.size()); }
    ComplexMatrix reconstruct() const;
};

/// Eigenvalues closer than this are treated as one eigenspace.
inline constexpr double kDegeneracyTol = 1e-10;

struct JacobiOptions {
    double off_diagonal_tol = 1e-12;
    int max_sweeps = 100;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix of any size.
/// Throws ConvergenceError if the off-diagonal Frobenius norm is still above
/// tolerance after max_sweeps. Degeneracy is not inspected.
Spectrum jacobi_eigensolver(const ComplexMatrix& m, const JacobiOptions& opts = {});

/// Spectrum of a Hermitian 2x2 or 4x4 matrix. Dimension 2 uses the closed
/// form a*I + n.sigma; dimension 4 uses cyclic Jacobi.
Spectrum eigendecompose(const ComplexMatrix& m);

/// As above, but inside each degenerate eigenspace the basis is chosen to
/// diagonalize the projection of `hint` (typically d(rho)/dt).
Spectrum eigendecompose(const ComplexMatrix& m, const ComplexMatrix& hint);

/// Smallest eigenvalue of a Hermitian 2x2 or 4x4 matrix.
double min_eigenvalue(const ComplexMatrix& m);

/// -sum lambda ln lambda with 0 ln 0 = 0 (non-positive eigenvalues contribute 0).
double von_neumann_entropy(const Spectrum& s);
double von_neumann_entropy(const ComplexMatrix& rho);

/// Closed-form qubit entropy as a function of the Bloch modulus only.
double qubit_entropy(double bloch_modulus);

/// dS/dt = -sum_j <psi_j|rhodot|psi_j> ln lambda_j over positive eigenvalues.
double entropy_rate(const Spectrum& s, const ComplexMatrix& rhodot);

} // namespace qbt
