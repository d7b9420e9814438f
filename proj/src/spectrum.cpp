// spectrum.cpp — closed-form qubit spectra and cyclic complex Jacobi

#include "qbt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace qbt {

namespace {

struct QubitDecomposition {
    double mean;
    Vec3 n;
};

// Hermitian 2x2 matrix written as mean*I + n.sigma.
QubitDecomposition split_qubit(const ComplexMatrix& m) {
    const double m00 = m(0, 0).real();
    const double m11 = m(1, 1).real();
    const Complex m01 = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    return {0.5 * (m00 + m11), Vec3(m01.real(), -m01.imag(), 0.5 * (m00 - m11))};
}

// Eigenvector of n.sigma with eigenvalue +1 for a unit vector n, followed by
// its orthogonal partner, as the columns of a unitary.
ComplexMatrix qubit_eigenvectors(const Vec3& n) {
    Eigen::Vector2cd up;
    if (n.z() >= 0.0) {
        up << Complex(1.0 + n.z(), 0.0), Complex(n.x(), n.y());
    } else {
        up << Complex(n.x(), -n.y()), Complex(1.0 - n.z(), 0.0);
    }
    up.normalize();
    ComplexMatrix u(2, 2);
    u(0, 0) = up(0);
    u(1, 0) = up(1);
    u(0, 1) = -std::conj(up(1));
    u(1, 1) = std::conj(up(0));
    return u;
}

Spectrum qubit_spectrum(const ComplexMatrix& m, const ComplexMatrix* hint) {
    const QubitDecomposition d = split_qubit(m);
    const double r = d.n.norm();
    Spectrum s;
    s.values.resize(2);
    s.values << d.mean + r, d.mean - r;
    if (2.0 * r > kDegeneracyTol) {
        s.vectors = qubit_eigenvectors(d.n / r);
        return s;
    }
    if (hint != nullptr) {
        const Vec3 nh = split_qubit(*hint).n;
        const double rh = nh.norm();
        if (2.0 * rh > kDegeneracyTol) {
            s.vectors = qubit_eigenvectors(nh / rh);
            s.degeneracy = Degeneracy::resolved;
            return s;
        }
    }
    s.vectors = identity(2);
    s.degeneracy = Degeneracy::unresolved;
    return s;
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// Index groups of consecutive (descending) eigenvalues closer than the tolerance.
std::vector<std::vector<int>> degenerate_groups(const Eigen::VectorXd& values) {
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < values.size(); ++i) {
        if (!groups.empty() && values(groups.back().back()) - values(i) < kDegeneracyTol) {
            groups.back().push_back(i);
        } else {
            groups.push_back({i});
        }
    }
    return groups;
}

Spectrum general_spectrum(const ComplexMatrix& m, const ComplexMatrix* hint) {
    Spectrum s = jacobi_eigensolver(m);
    bool any_degenerate = false;
    bool all_resolved = true;
    for (const auto& group : degenerate_groups(s.values)) {
        if (group.size() < 2) {
            continue;
        }
        any_degenerate = true;
        if (hint == nullptr) {
            all_resolved = false;
            continue;
        }
        const auto k = static_cast<Eigen::Index>(group.size());
        ComplexMatrix basis(m.rows(), k);
        for (Eigen::Index c = 0; c < k; ++c) {
            basis.col(c) = s.vectors.col(group[c]);
        }
        ComplexMatrix sub = basis.adjoint() * (*hint) * basis;
        sub = 0.5 * (sub + sub.adjoint()).eval();
        const Spectrum inner = jacobi_eigensolver(sub);
        for (const auto& g : degenerate_groups(inner.values)) {
            if (g.size() > 1) {
                all_resolved = false;
            }
        }
        const ComplexMatrix rotated = basis * inner.vectors;
        for (Eigen::Index c = 0; c < k; ++c) {
            s.vectors.col(group[c]) = rotated.col(c);
        }
    }
    if (any_degenerate) {
        s.degeneracy = all_resolved ? Degeneracy::resolved : Degeneracy::unresolved;
    }
    return s;
}

void check_hermitian_input(const ComplexMatrix& m) {
    if (auto h = hermiticity_violation(m, 1e-10 * std::max(1.0, m.cwiseAbs().maxCoeff())); !h.empty()) {
        throw PhysicalityError("eigendecompose: " + h);
    }
}

} // namespace

ComplexMatrix Spectrum::reconstruct() const {
    return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

Spectrum jacobi_eigensolver(const ComplexMatrix& m, const JacobiOptions& opts) {
    const Eigen::Index n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = identity(static_cast<int>(n));
    bool converged = off_diagonal_norm(a) < opts.off_diagonal_tol;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) {
                    continue;
                }
                const Complex phase = std::polar(1.0, -std::arg(a(p, q)));
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // G = [[c, s], [-s*phase, c*phase]] on the (p, q) plane; a <- G^H a G.
                for (Eigen::Index i = 0; i < n; ++i) {
                    const Complex ap = a(i, p);
                    const Complex aq = a(i, q);
                    a(i, p) = c * ap - s * phase * aq;
                    a(i, q) = s * ap + c * phase * aq;
                    const Complex vp = v(i, p);
                    const Complex vq = v(i, q);
                    v(i, p) = c * vp - s * phase * vq;
                    v(i, q) = s * vp + c * phase * vq;
                }
                for (Eigen::Index j = 0; j < n; ++j) {
                    const Complex ap = a(p, j);
                    const Complex aq = a(q, j);
                    a(p, j) = c * ap - s * std::conj(phase) * aq;
                    a(q, j) = s * ap + c * std::conj(phase) * aq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
        converged = off_diagonal_norm(a) < opts.off_diagonal_tol;
    }
    if (!converged) {
        std::ostringstream os;
        os << "Jacobi eigensolver did not converge in " << opts.max_sweeps
           << " sweeps (off-diagonal norm " << off_diagonal_norm(a) << ")";
        throw ConvergenceError(os.str());
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });
    Spectrum s;
    s.values.resize(n);
    s.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        s.values(k) = a(order[k], order[k]).real();
        s.vectors.col(k) = v.col(order[k]);
    }
    return s;
}

Spectrum eigendecompose(const ComplexMatrix& m) {
    check_hermitian_input(m);
    return m.rows() == 2 ? qubit_spectrum(m, nullptr) : general_spectrum(m, nullptr);
}

Spectrum eigendecompose(const ComplexMatrix& m, const ComplexMatrix& hint) {
    check_hermitian_input(m);
    if (hint.rows() != m.rows() || hint.cols() != m.cols()) {
        throw PhysicalityError("eigendecompose: hint dimension mismatch");
    }
    return m.rows() == 2 ? qubit_spectrum(m, &hint) : general_spectrum(m, &hint);
}

double min_eigenvalue(const ComplexMatrix& m) {
    if (m.rows() == 2) {
        const QubitDecomposition d = split_qubit(m);
        return d.mean - d.n.norm();
    }
    JacobiOptions opts;
    opts.off_diagonal_tol *= std::max(1.0, m.cwiseAbs().maxCoeff());
    return jacobi_eigensolver(m, opts).values.minCoeff();
}

double von_neumann_entropy(const Spectrum& s) {
    double entropy = 0.0;
    for (Eigen::Index j = 0; j < s.values.size(); ++j) {
        const double l = s.values(j);
        if (l > 0.0) {
            entropy -= l * std::log(l);
        }
    }
    return entropy;
}

double von_neumann_entropy(const ComplexMatrix& rho) { return von_neumann_entropy(eigendecompose(rho)); }

double qubit_entropy(double bloch_modulus) {
    double entropy = 0.0;
    for (double l : {0.5 * (1.0 + bloch_modulus), 0.5 * (1.0 - bloch_modulus)}) {
        if (l > 0.0) {
            entropy -= l * std::log(l);
        }
    }
    return entropy;
}

double entropy_rate(const Spectrum& s, const ComplexMatrix& rhodot) {
    double rate = 0.0;
    for (Eigen::Index j = 0; j < s.values.size(); ++j) {
        const double l = s.values(j);
        if (l > 0.0) {
            const double ldot = (s.vectors.col(j).adjoint() * rhodot * s.vectors.col(j))(0, 0).real();
            rate -= ldot * std::log(l);
        }
    }
    return rate;
}

} // namespace qbt
