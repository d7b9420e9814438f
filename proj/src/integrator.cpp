// integrator.cpp — RK4 stepping with a positivity monitor

#include "qbt/integrator.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qbt/spectrum.hpp"

namespace qbt {

namespace {

std::string positivity_message(double t, double lmin) {
    std::ostringstream os;
    os.precision(10);
    os << "positivity monitor: min eigenvalue " << lmin << " at t = " << t;
    return os.str();
}

} // namespace

PositivityError::PositivityError(double t, double min_eigenvalue)
    : std::runtime_error(positivity_message(t, min_eigenvalue)), time_(t), min_eigenvalue_(min_eigenvalue) {}

Trajectory integrate(const LindbladModel& model, const ComplexMatrix& rho0, const IntegratorConfig& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.t_max > 0.0) || cfg.sample_stride < 1) {
        throw std::invalid_argument("integrate: need dt > 0, t_max > 0, sample_stride >= 1");
    }
    if (rho0.rows() != model.dim()) {
        throw std::invalid_argument("integrate: initial state dimension does not match the model");
    }
    require_density(rho0);

    const auto steps = std::max<long long>(1, std::llround(cfg.t_max / cfg.dt));
    Trajectory traj{{}, {}, {}, model, std::numeric_limits<double>::infinity()};
    const auto expected = static_cast<std::size_t>(steps / cfg.sample_stride + 2);
    traj.times.reserve(expected);
    traj.states.reserve(expected);
    traj.derivatives.reserve(expected);

    auto record = [&](long long step, const ComplexMatrix& rho, const ComplexMatrix& rhodot) {
        const double t = static_cast<double>(step) * cfg.dt;
        const double lmin = rho.allFinite() ? min_eigenvalue(rho) : -std::numeric_limits<double>::infinity();
        if (!(lmin >= -kPositivityMonitorTol)) {
            throw PositivityError(t, lmin);
        }
        traj.min_eigenvalue = std::min(traj.min_eigenvalue, lmin);
        traj.times.push_back(t);
        traj.states.push_back(rho);
        traj.derivatives.push_back(rhodot);
    };

    const double h = cfg.dt;
    ComplexMatrix rho = rho0;
    ComplexMatrix k1 = model.rhs(rho);
    record(0, rho, k1);
    for (long long step = 1; step <= steps; ++step) {
        const ComplexMatrix k2 = model.rhs(rho + (0.5 * h) * k1);
        const ComplexMatrix k3 = model.rhs(rho + (0.5 * h) * k2);
        const ComplexMatrix k4 = model.rhs(rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        k1 = model.rhs(rho);
        if (step % cfg.sample_stride == 0 || step == steps) {
            record(step, rho, k1);
        }
    }
    return traj;
}

} // namespace qbt
