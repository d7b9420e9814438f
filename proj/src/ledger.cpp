// ledger.cpp — per-sample thermodynamics, trapezoid integrals and audits

#include "qbt/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbt {

namespace {

ThermoSample make_sample(double t, const ComplexMatrix& rho, const ComplexMatrix& rhodot, const EffectiveField& v,
                         const Vec3& vdot, const EnvironmentSpec& env) {
    ThermoSample s;
    s.t = t;
    s.bloch = pauli_expectations(rho);
    const BlochState b(s.bloch);
    const Vec3 bdot = pauli_expectations(rhodot);
    s.modulus = b.modulus();
    const PolarAngles angles = polar_angles(b, v);
    s.theta = angles.theta ? MarkedValue::finite(*angles.theta) : MarkedValue::undefined();

    const ComplexMatrix H = qubit_hamiltonian(v.vector());
    const ComplexMatrix Hdot = qubit_hamiltonian(vdot);
    s.energy = internal_energy(b, v);
    s.entropy = von_neumann_entropy(eigendecompose(rho));
    s.energy_rate = (Hdot * rho).trace().real() + (H * rhodot).trace().real();

    const AlickiRates p1 = p1_rates(b, bdot, v, vdot);
    const EntropicRates p2 = p2_rates_bloch(b, bdot, v, vdot);
    s.q1_rate = p1.heat;
    s.w1_rate = p1.work;
    s.q2_rate = p2.heat;
    s.w2_rate = p2.work;
    s.wprime_rate = p2.rotational_work;
    s.spectral_fallback = p2.spectral_fallback;
    s.coherence = l1_coherence(rho, v);

    s.temp1 = temperature_p1(b, v);
    s.temp2 = temperature_p2(b, v);
    s.cap1 = heat_capacity_p1(b, v);
    s.cap2 = heat_capacity_p2(b, v);
    s.sgen1_rate = entropy_production_p1_rate(b, bdot, v);
    s.sgen_ht_rate = env.T_env ? boundary_entropy_rate(s.q2_rate, s.temp2, *env.T_env) : MarkedValue::undefined();
    return s;
}

double trapezoid(double f0, double f1, double dt) { return 0.5 * (f0 + f1) * dt; }

LedgerAudit first_law_audit(const std::string& name, const ThermoLedger& ledger, const std::vector<double>& Q,
                            const std::vector<double>& W, bool alicki) {
    LedgerAudit a;
    a.name = name;
    a.tolerance = kCumulativeClosureTol;
    const auto& samples = ledger.samples;
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        const double rate_sum = alicki ? s.q1_rate + s.w1_rate : s.q2_rate + s.w2_rate;
        a.rate_residual = std::max(a.rate_residual, std::abs(rate_sum - s.energy_rate));
        const double de = s.energy - samples.front().energy;
        const double residual = std::abs(de - (Q[k] + W[k]));
        const double ratio = residual / std::max(1.0, std::abs(de));
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            a.worst_time = s.t;
        }
        a.residual = std::max(a.residual, residual);
    }
    a.passed = worst_ratio <= kCumulativeClosureTol && a.rate_residual <= kRateClosureTol;
    std::ostringstream os;
    os.precision(3);
    os << "rate residual " << a.rate_residual << " (tol " << kRateClosureTol << "), relative cumulative "
       << worst_ratio;
    a.note = os.str();
    return a;
}

LedgerAudit clausius_audit(const ThermoLedger& ledger) {
    LedgerAudit a;
    a.name = "clausius_entropic";
    a.tolerance = kClausiusTol;
    const auto& samples = ledger.samples;
    double entropy_change = 0.0;
    double flux = 0.0;
    std::size_t used = 0;
    std::size_t skipped = 0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const auto& p = samples[k - 1];
        const auto& s = samples[k];
        if (!p.temp2.is_regular() || !s.temp2.is_regular()) {
            ++skipped;
            continue;
        }
        ++used;
        entropy_change += s.entropy - p.entropy;
        flux += trapezoid(p.q2_rate / p.temp2.value(), s.q2_rate / s.temp2.value(), s.t - p.t);
        const double residual = std::abs(entropy_change - flux);
        if (residual > a.residual) {
            a.residual = residual;
            a.worst_time = s.t;
        }
    }
    a.applicable = used > 0;
    a.passed = a.residual <= kClausiusTol;
    std::ostringstream os;
    os << used << " intervals integrated, " << skipped << " skipped at temperature markers";
    a.note = os.str();
    return a;
}

} // namespace

bool ThermoLedger::passed() const {
    return std::all_of(audits.begin(), audits.end(), [](const LedgerAudit& a) { return a.passed; });
}

double ThermoLedger::delta_energy() const {
    return samples.empty() ? 0.0 : samples.back().energy - samples.front().energy;
}

double ThermoLedger::delta_entropy() const {
    return samples.empty() ? 0.0 : samples.back().entropy - samples.front().entropy;
}

const LedgerAudit* ThermoLedger::audit(const std::string& name) const {
    for (const auto& a : audits) {
        if (a.name == name) {
            return &a;
        }
    }
    return nullptr;
}

ThermoLedger annotate_trajectory(const Trajectory& traj, const FieldProtocol& field, const EnvironmentSpec& env,
                                 std::optional<Subsystem> subsystem) {
    const int dim = traj.model.dim();
    if (dim == 4 && !subsystem) {
        throw std::invalid_argument("annotate_trajectory: a two-qubit trajectory needs a subsystem selector");
    }
    if (dim == 2 && subsystem) {
        throw std::invalid_argument("annotate_trajectory: subsystem selector given for a single qubit");
    }
    if (env.T_env && !(*env.T_env >= 0.0)) {
        throw std::invalid_argument("annotate_trajectory: T_env must be >= 0");
    }

    ThermoLedger ledger;
    ledger.label = !subsystem ? "system" : (*subsystem == Subsystem::A ? "A" : "B");
    ledger.T_env = env.T_env;
    ledger.samples.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double t = traj.times[k];
        const ComplexMatrix rho = subsystem ? partial_trace(traj.states[k], *subsystem) : traj.states[k];
        const ComplexMatrix rhodot = subsystem ? partial_trace(traj.derivatives[k], *subsystem) : traj.derivatives[k];
        ledger.samples.push_back(make_sample(t, rho, rhodot, field.at(t), field.ramp, env));
    }

    const std::size_t n = ledger.samples.size();
    for (auto* series : {&ledger.Q1, &ledger.W1, &ledger.Q2, &ledger.W2, &ledger.Wprime, &ledger.Sgen1,
                         &ledger.Sgen_ht}) {
        series->assign(n, 0.0);
    }
    for (std::size_t k = 1; k < n; ++k) {
        const auto& p = ledger.samples[k - 1];
        const auto& s = ledger.samples[k];
        const double h = s.t - p.t;
        ledger.Q1[k] = ledger.Q1[k - 1] + trapezoid(p.q1_rate, s.q1_rate, h);
        ledger.W1[k] = ledger.W1[k - 1] + trapezoid(p.w1_rate, s.w1_rate, h);
        ledger.Q2[k] = ledger.Q2[k - 1] + trapezoid(p.q2_rate, s.q2_rate, h);
        ledger.W2[k] = ledger.W2[k - 1] + trapezoid(p.w2_rate, s.w2_rate, h);
        ledger.Wprime[k] = ledger.Wprime[k - 1] + trapezoid(p.wprime_rate, s.wprime_rate, h);
        const bool sgen_ok = p.sgen1_rate.is_finite() && s.sgen1_rate.is_finite();
        ledger.Sgen1[k] = ledger.Sgen1[k - 1] + (sgen_ok ? trapezoid(p.sgen1_rate.value(), s.sgen1_rate.value(), h) : 0.0);
        const bool ht_ok = p.sgen_ht_rate.is_finite() && s.sgen_ht_rate.is_finite();
        ledger.Sgen_ht[k] = ledger.Sgen_ht[k - 1] + (ht_ok ? trapezoid(p.sgen_ht_rate.value(), s.sgen_ht_rate.value(), h) : 0.0);
    }

    ledger.audits.push_back(first_law_audit("first_law_alicki", ledger, ledger.Q1, ledger.W1, true));
    ledger.audits.push_back(first_law_audit("first_law_entropic", ledger, ledger.Q2, ledger.W2, false));
    ledger.audits.push_back(clausius_audit(ledger));
    return ledger;
}

} // namespace qbt
