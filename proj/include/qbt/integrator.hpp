// integrator.hpp — fixed-step RK4 propagation of density matrices

#pragma once

#include <stdexcept>
#include <vector>

#include "qbt/lindblad.hpp"

namespace qbt {

struct IntegratorConfig {
    double dt = 1e-3;
    double t_max = 1.0;
    int sample_stride = 1;
};

/// Most negative eigenvalue tolerated at a stored sample.
inline constexpr double kPositivityMonitorTol = 1e-7;

/// Raised when a sampled state leaves the positive cone (or becomes non-finite).
class PositivityError : public std::runtime_error {
public:
    PositivityError(double t, double min_eigenvalue);
    double time() const { return time_; }
    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    double time_;
    double min_eigenvalue_;
};

/// Sampled solution. derivatives[k] is the generator evaluated at states[k].
/// Trace is not renormalized.
struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexMatrix> states;
    std::vector<ComplexMatrix> derivatives;
    LindbladModel model;
    double min_eigenvalue = 0.0; ///< smallest eigenvalue seen over all samples

    std::size_t size() const { return times.size(); }
};

/// Classic RK4 with fixed step. The number of steps is round(t_max / dt);
/// samples are stored every sample_stride steps and at the final step.
Trajectory integrate(const LindbladModel& model, const ComplexMatrix& rho0, const IntegratorConfig& cfg);

} // namespace qbt
