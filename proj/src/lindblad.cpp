// lindblad.cpp — generator assembly and evaluation

#include "qbt/lindblad.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qbt {

LindbladModel::LindbladModel(ComplexMatrix hamiltonian, std::vector<JumpChannel> jumps, std::string label)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)), label_(std::move(label)) {
    const auto d = hamiltonian_.rows();
    if (hamiltonian_.cols() != d || (d != 2 && d != 4)) {
        throw std::invalid_argument("LindbladModel: dimension must be 2 or 4");
    }
    if (auto h = hermiticity_violation(hamiltonian_); !h.empty()) {
        throw std::invalid_argument("LindbladModel: Hamiltonian " + h);
    }
    decay_.reserve(jumps_.size());
    for (const auto& j : jumps_) {
        if (j.op.rows() != d || j.op.cols() != d) {
            throw std::invalid_argument("LindbladModel: jump operator '" + j.label + "' has wrong dimension");
        }
        if (!(j.rate >= 0.0) || !std::isfinite(j.rate)) {
            std::ostringstream os;
            os << "LindbladModel: jump '" << j.label << "' has invalid rate " << j.rate;
            throw std::invalid_argument(os.str());
        }
        decay_.push_back(j.op.adjoint() * j.op);
    }
}

ComplexMatrix LindbladModel::rhs(const ComplexMatrix& rho) const {
    const Complex minus_i(0.0, -1.0);
    ComplexMatrix out = minus_i * (hamiltonian_ * rho - rho * hamiltonian_);
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        const auto& j = jumps_[k];
        if (j.rate == 0.0) {
            continue;
        }
        out.noalias() += j.rate * (j.op * rho * j.op.adjoint());
        out.noalias() -= (0.5 * j.rate) * (decay_[k] * rho + rho * decay_[k]);
    }
    return out;
}

double planck_occupation(double beta_h_omega0) {
    if (std::isinf(beta_h_omega0) && beta_h_omega0 > 0.0) {
        return 0.0;
    }
    if (!(beta_h_omega0 > 0.0)) {
        throw std::invalid_argument("planck_occupation: argument must be positive (negative bath "
                                    "temperatures are not modeled)");
    }
    return 1.0 / std::expm1(beta_h_omega0);
}

namespace {

ComplexMatrix free_hamiltonian(double eps, Picture picture) {
    return picture == Picture::schrodinger ? qubit_hamiltonian(Vec3(0.0, 0.0, eps))
                                           : ComplexMatrix::Zero(2, 2);
}

} // namespace

LindbladModel thermal_bath_model(double gamma0, double T_env, double eps, Picture picture) {
    if (!(gamma0 > 0.0) || !(T_env >= 0.0) || !(eps > 0.0)) {
        throw std::invalid_argument("thermal_bath_model: need gamma0 > 0, T_env >= 0, eps > 0");
    }
    const double x = T_env == 0.0 ? std::numeric_limits<double>::infinity() : 2.0 * eps / T_env;
    const double n = planck_occupation(x);
    std::vector<JumpChannel> jumps{{lowering(), gamma0 * (n + 1.0), "emission"}};
    if (n > 0.0) {
        jumps.push_back({raising(), gamma0 * n, "absorption"});
    }
    return LindbladModel(free_hamiltonian(eps, picture), std::move(jumps), "thermal_bath");
}

LindbladModel dephasing_model(double gamma_phi, double eps, Picture picture) {
    if (!(gamma_phi > 0.0) || !(eps > 0.0)) {
        throw std::invalid_argument("dephasing_model: need gamma_phi > 0, eps > 0");
    }
    return LindbladModel(free_hamiltonian(eps, picture), {{sigma_z(), 0.5 * gamma_phi, "dephasing"}},
                         "dephasing");
}

LindbladModel two_atom_model(double gamma0, double g, double eps) {
    if (!(gamma0 > 0.0) || !(g >= 0.0 && g <= 1.0) || !(eps > 0.0)) {
        throw std::invalid_argument("two_atom_model: need gamma0 > 0, 0 <= g <= 1, eps > 0");
    }
    const ComplexMatrix lower_a = kron(lowering(), identity(2));
    const ComplexMatrix lower_b = kron(identity(2), lowering());
    const double norm = 1.0 / std::sqrt(2.0);
    std::vector<JumpChannel> jumps{
        {norm * (lower_a + lower_b), gamma0 * (1.0 + g), "symmetric"},
        {norm * (lower_a - lower_b), gamma0 * (1.0 - g), "antisymmetric"},
    };
    return LindbladModel(ComplexMatrix::Zero(4, 4), std::move(jumps), "two_atom");
}

LindbladModel exchange_unitary_model(double J) {
    if (J == 0.0 || !std::isfinite(J)) {
        throw std::invalid_argument("exchange_unitary_model: J must be finite and nonzero");
    }
    const ComplexMatrix h = J * (kron(raising(), lowering()) + kron(lowering(), raising()));
    return LindbladModel(h, {}, "exchange_unitary");
}

} // namespace qbt
