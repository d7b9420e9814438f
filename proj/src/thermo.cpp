// thermo.cpp — closed forms for both heat/work paradigms

#include "qbt/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbt {

namespace {

bool is_pure(double modulus) { return modulus >= 1.0 - kPureStateTol; }

double energy_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v, const Vec3& vdot) {
    return -bdot.dot(v.vector()) - b.vector().dot(vdot);
}

// Unit-vector derivative dB^/dt = (Bdot - (B^.Bdot) B^) / B, for B > 0.
Vec3 direction_rate(const BlochState& b, const Vec3& bdot) {
    const double m = b.modulus();
    const Vec3 u = b.vector() / m;
    return (bdot - u.dot(bdot) * u) / m;
}

ComplexMatrix bloch_derivative_matrix(const Vec3& bdot) {
    return 0.5 * (bdot.x() * sigma_x() + bdot.y() * sigma_y() + bdot.z() * sigma_z());
}

} // namespace

AlickiRates p1_rates(const BlochState& b, const Vec3& bdot, const EffectiveField& v, const Vec3& vdot) {
    return {-bdot.dot(v.vector()), -b.vector().dot(vdot)};
}

double bloch_modulus_rate(const BlochState& b, const Vec3& bdot) {
    const double m = b.modulus();
    return m == 0.0 ? 0.0 : b.vector().dot(bdot) / m;
}

EntropicRates p2_rates_bloch(const BlochState& b, const Vec3& bdot, const EffectiveField& v, const Vec3& vdot) {
    const double de = energy_rate(b, bdot, v, vdot);
    const double w1 = -b.vector().dot(vdot);
    const double m = b.modulus();
    if (m == 0.0) {
        // (B.Bdot)/B is 0/0 here; the spectral form picks the eigenbasis along Bdot.
        const auto spectral = p2_rates_spectral(bloch_to_density(b), bloch_derivative_matrix(bdot),
                                                qubit_hamiltonian(v.vector()), qubit_hamiltonian(vdot));
        const double q2 = spectral->heat;
        return {q2, de - q2, de - q2 - w1, true};
    }
    const Vec3 u = b.vector() / m;
    const double q2 = -bloch_modulus_rate(b, bdot) * u.dot(v.vector());
    const double w2 = de - q2;
    return {q2, w2, w2 - w1, false};
}

std::optional<SpectralRates> p2_rates_spectral(const ComplexMatrix& rho, const ComplexMatrix& rhodot,
                                               const ComplexMatrix& H, const ComplexMatrix& Hdot) {
    const Spectrum s = eigendecompose(rho, rhodot);
    if (s.degeneracy == Degeneracy::unresolved && s.dim() > 2) {
        return std::nullopt;
    }
    double heat = 0.0;
    for (int j = 0; j < s.dim(); ++j) {
        const auto psi = s.vectors.col(j);
        const double ldot = (psi.adjoint() * rhodot * psi)(0, 0).real();
        const double level = (psi.adjoint() * H * psi)(0, 0).real();
        heat += ldot * level;
    }
    const double de = (Hdot * rho).trace().real() + (H * rhodot).trace().real();
    return SpectralRates{heat, de - heat, s.degeneracy};
}

double polar_angle_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v) {
    const double m = b.modulus();
    if (m == 0.0) {
        return 0.0;
    }
    const Vec3 axis = v.direction();
    const double sin_theta = (b.vector() / m).cross(axis).norm();
    if (sin_theta < kOrthogonalTol) {
        return 0.0;
    }
    return -direction_rate(b, bdot).dot(axis) / sin_theta;
}

double rotational_work_direct(const BlochState& b, const Vec3& bdot, const EffectiveField& v) {
    const double m = b.modulus();
    if (m == 0.0) {
        return 0.0;
    }
    return -m * direction_rate(b, bdot).dot(v.vector());
}

double rotational_work_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v) {
    const double theta_rate = polar_angle_rate(b, bdot, v);
    if (theta_rate == 0.0) {
        return 0.0;
    }
    return l1_coherence(bloch_to_density(b), v) * v.epsilon() * theta_rate;
}

double torque_work_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v) {
    const double theta_rate = polar_angle_rate(b, bdot, v);
    if (theta_rate == 0.0) {
        return 0.0;
    }
    const Vec3 torque = b.vector().cross(v.vector());
    const Vec3 azimuthal = v.direction().cross(b.vector()).normalized();
    return -torque.dot(azimuthal) * theta_rate;
}

MarkedValue temperature_p1(const BlochState& b, const EffectiveField& v) {
    const double m = b.modulus();
    if (m == 0.0) {
        return MarkedValue::infinite();
    }
    const double c = b.vector().dot(v.direction()) / m;
    if (std::abs(c) < kOrthogonalTol) {
        return MarkedValue::undefined();
    }
    if (is_pure(m)) {
        return MarkedValue::finite(0.0);
    }
    return MarkedValue::finite(v.epsilon() / (UnitSystem::k_B * c * std::atanh(m)));
}

MarkedValue temperature_p2(const BlochState& b, const EffectiveField& v) {
    const double m = b.modulus();
    if (m == 0.0) {
        return MarkedValue::infinite();
    }
    const double c = b.vector().dot(v.direction()) / m;
    if (is_pure(m) || std::abs(c) < kOrthogonalTol) {
        return MarkedValue::finite(0.0);
    }
    return MarkedValue::finite(v.epsilon() * c / (UnitSystem::k_B * std::atanh(m)));
}

MarkedValue heat_capacity_p1(const BlochState& b, const EffectiveField& v) {
    const double m = b.modulus();
    if (m == 0.0 || is_pure(m)) {
        return MarkedValue::finite(0.0);
    }
    const double p = b.vector().dot(v.direction());
    const double a = std::atanh(m);
    const double numerator = UnitSystem::k_B * m * (1.0 - m * m) * a * a * p * p;
    const double term1 = a * (m * m - p * p) * (1.0 - m * m);
    const double term2 = m * p;
    const double denominator = term1 + term2;
    if (denominator == 0.0 || std::abs(denominator) <= 1e-12 * (std::abs(term1) + std::abs(term2))) {
        return MarkedValue::undefined();
    }
    return MarkedValue::finite(numerator / denominator);
}

MarkedValue heat_capacity_p2(const BlochState& b, const EffectiveField& v) {
    (void)v; // x = (B^.v)/(k_B T) reduces to arctanh B for every field.
    const double m = b.modulus();
    if (is_pure(m)) {
        return MarkedValue::finite(0.0);
    }
    const double x = std::atanh(m);
    const double r = x / std::cosh(x);
    return MarkedValue::finite(UnitSystem::k_B * r * r);
}

MarkedValue heat_capacity_fd(const BlochState& b, const EffectiveField& v, Paradigm paradigm, double step) {
    const double m = b.modulus();
    if (m == 0.0 || is_pure(m) || !(step > 0.0)) {
        return MarkedValue::undefined();
    }
    const double h = std::min({step, 0.5 * m, 0.5 * (1.0 - m)});
    const Vec3 u = b.vector() / m;
    const BlochState lo((m - h) * u);
    const BlochState hi((m + h) * u);
    auto temp = [&](const BlochState& s) {
        return paradigm == Paradigm::alicki ? temperature_p1(s, v) : temperature_p2(s, v);
    };
    const MarkedValue t_lo = temp(lo);
    const MarkedValue t_hi = temp(hi);
    if (!t_lo.is_finite() || !t_hi.is_finite() || t_hi.value() == t_lo.value()) {
        return MarkedValue::undefined();
    }
    return MarkedValue::finite((internal_energy(hi, v) - internal_energy(lo, v)) / (t_hi.value() - t_lo.value()));
}

MarkedValue entropy_production_p1_rate(const BlochState& b, const Vec3& bdot, const EffectiveField& v) {
    const double m = b.modulus();
    if (m == 0.0) {
        return MarkedValue::finite(0.0);
    }
    const Vec3 u = b.vector() / m;
    const Vec3 axis = v.direction();
    const double projected = (u - axis.dot(u) * axis).dot(bdot);
    if (is_pure(m)) {
        return projected == 0.0 ? MarkedValue::finite(0.0) : MarkedValue::infinite(-projected);
    }
    return MarkedValue::finite(-UnitSystem::k_B * std::atanh(m) * projected);
}

MarkedValue entropy_rate_bloch(const BlochState& b, const Vec3& bdot) {
    const double m = b.modulus();
    const double rate = bloch_modulus_rate(b, bdot);
    if (is_pure(m)) {
        return rate == 0.0 ? MarkedValue::finite(0.0) : MarkedValue::infinite(-rate);
    }
    return MarkedValue::finite(-UnitSystem::k_B * std::atanh(m) * rate);
}

MarkedValue boundary_entropy_rate(double q_rate, const MarkedValue& T_sys, double T_env) {
    if (!T_sys.is_regular() || !(T_env > 0.0) || !std::isfinite(T_env)) {
        return MarkedValue::undefined();
    }
    return MarkedValue::finite(q_rate * (1.0 / T_sys.value() - 1.0 / T_env));
}

BlochState equilibrium_bloch(double T_env, const EffectiveField& v) {
    if (!(T_env >= 0.0)) {
        throw std::invalid_argument("equilibrium_bloch: T_env must be >= 0");
    }
    if (T_env == 0.0) {
        return BlochState(v.direction());
    }
    return BlochState(std::tanh(v.epsilon() / (UnitSystem::k_B * T_env)) * v.direction());
}

} // namespace qbt
