// state.cpp — Bloch/density conversions, coherence and partial trace

#include "qbt/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbt/spectrum.hpp"

namespace qbt {

namespace {

std::string describe(const Vec3& b) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << b.x() << ", " << b.y() << ", " << b.z() << ")";
    return os.str();
}

} // namespace

BlochState::BlochState(double bx, double by, double bz) : BlochState(Vec3(bx, by, bz)) {}

BlochState::BlochState(const Vec3& b) : b_(b) {
    if (!b.allFinite()) {
        throw PhysicalityError("Bloch vector " + describe(b) + " has non-finite components");
    }
    const double m = b.norm();
    if (m > 1.0 + kBlochSlack) {
        std::ostringstream os;
        os << "Bloch vector " << describe(b) << " has modulus " << m
           << " > 1 (not a physical state)";
        throw PhysicalityError(os.str());
    }
}

std::optional<Vec3> BlochState::direction() const {
    const double m = modulus();
    if (m == 0.0) {
        return std::nullopt;
    }
    return b_ / m;
}

EffectiveField::EffectiveField(double vx, double vy, double vz) : EffectiveField(Vec3(vx, vy, vz)) {}

EffectiveField::EffectiveField(const Vec3& v) : v_(v), eps_(v.norm()) {
    if (!v.allFinite() || !(eps_ > 0.0)) {
        throw PhysicalityError("effective field " + describe(v) + " must be finite with |v| > 0");
    }
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix lowering() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

ComplexMatrix raising() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix qubit_hamiltonian(const Vec3& v) {
    return -(v.x() * sigma_x() + v.y() * sigma_y() + v.z() * sigma_z());
}

std::string hermiticity_violation(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return "matrix is not square";
    }
    if (!m.allFinite()) {
        return "matrix has non-finite entries";
    }
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol) {
        std::ostringstream os;
        os << "matrix is not Hermitian (max |M - M^dagger| = " << dev << ")";
        return os.str();
    }
    return {};
}

std::string density_violation(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
        return "density matrix must be 2x2 or 4x4";
    }
    if (auto h = hermiticity_violation(m); !h.empty()) {
        return h;
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os.precision(17);
        os << "density matrix trace is " << tr << ", expected 1";
        return os.str();
    }
    const double lmin = min_eigenvalue(m);
    if (lmin < -kPositivityTol) {
        std::ostringstream os;
        os << "density matrix has negative eigenvalue " << lmin;
        return os.str();
    }
    return {};
}

void require_density(const ComplexMatrix& m) {
    if (auto v = density_violation(m); !v.empty()) {
        throw PhysicalityError(v);
    }
}

ComplexMatrix bloch_to_density(const BlochState& b) {
    return 0.5 * (identity(2) + b.x() * sigma_x() + b.y() * sigma_y() + b.z() * sigma_z());
}

Vec3 pauli_expectations(const ComplexMatrix& m) {
    return Vec3((m * sigma_x()).trace().real(),
                (m * sigma_y()).trace().real(),
                (m * sigma_z()).trace().real());
}

BlochState density_to_bloch(const ComplexMatrix& rho) {
    if (rho.rows() != 2 || rho.cols() != 2) {
        throw PhysicalityError("density_to_bloch expects a 2x2 matrix");
    }
    if (auto h = hermiticity_violation(rho); !h.empty()) {
        throw PhysicalityError(h);
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os.precision(17);
        os << "density matrix trace is " << tr << ", expected 1";
        throw PhysicalityError(os.str());
    }
    return BlochState(pauli_expectations(rho));
}

double internal_energy(const BlochState& b, const EffectiveField& v) {
    return -b.vector().dot(v.vector());
}

double l1_coherence(const ComplexMatrix& rho, const EffectiveField& v) {
    const Spectrum energy_basis = eigendecompose(qubit_hamiltonian(v.vector()));
    const ComplexMatrix rotated = energy_basis.vectors.adjoint() * rho * energy_basis.vectors;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < rotated.rows(); ++i) {
        for (Eigen::Index j = 0; j < rotated.cols(); ++j) {
            if (i != j) {
                sum += std::abs(rotated(i, j));
            }
        }
    }
    return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho_ab, Subsystem keep) {
    if (rho_ab.rows() != 4 || rho_ab.cols() != 4) {
        throw PhysicalityError("partial_trace expects a 4x4 matrix");
    }
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(i, j) += keep == Subsystem::A ? rho_ab(2 * i + k, 2 * j + k)
                                                  : rho_ab(2 * k + i, 2 * k + j);
            }
        }
    }
    return out;
}

FieldFrame field_frame(const EffectiveField& v) {
    const Vec3 axis = v.direction();
    const Vec3 helper = std::abs(axis.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    const Vec3 e1 = (helper - helper.dot(axis) * axis).normalized();
    return {e1, axis.cross(e1), axis};
}

PolarAngles polar_angles(const BlochState& b, const EffectiveField& v) {
    const double m = b.modulus();
    if (m == 0.0) {
        return {0.0, std::nullopt, 0.0};
    }
    const FieldFrame f = field_frame(v);
    const Vec3 u = b.vector() / m;
    const double c = std::clamp(u.dot(f.axis), -1.0, 1.0);
    const double x = u.dot(f.e1);
    const double y = u.dot(f.e2);
    const double phi = (x == 0.0 && y == 0.0) ? 0.0 : std::atan2(y, x);
    return {m, std::acos(c), phi};
}

} // namespace qbt
