// test_ledger.cpp — trajectory annotation, cumulative integrals and audits

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "qbt/ledger.hpp"

using namespace qbt;
using namespace qbt::testing;

namespace {

Trajectory bath_run(const Vec3& b0, double T, double t_max, double dt = 1e-3) {
    return integrate(thermal_bath_model(1.0, T, 1.0), bloch_to_density(BlochState(b0)), {dt, t_max, 1});
}

} // namespace

TEST_CASE("thermal relaxation ledger") {
    const ThermoLedger l = annotate_trajectory(bath_run({0.2, 0.5, 0.4}, 10.0, 8.0), {}, {10.0});
    CHECK(l.passed());
    CHECK(l.label == "system");
    REQUIRE(l.samples.size() == 8001);
    CHECK(std::all_of(l.W1.begin(), l.W1.end(), [](double w) { return w == 0.0; }));
    CHECK(l.W2.back() < 0.0);
    CHECK(l.samples.back().temp1.value() == doctest::Approx(10.0).epsilon(1e-3));
    CHECK(l.samples.back().temp2.value() == doctest::Approx(10.0).epsilon(1e-3));
    CHECK(l.Q1.front() == 0.0);
    CHECK(l.delta_energy() == doctest::Approx(l.Q1.back() + l.W1.back()).epsilon(1e-5));
    for (const char* name : {"first_law_alicki", "first_law_entropic", "clausius_entropic"}) {
        REQUIRE(l.audit(name) != nullptr);
        CHECK(l.audit(name)->applicable);
        CHECK(l.audit(name)->passed);
    }
    CHECK(l.audit("nonexistent") == nullptr);

    for (const auto& s : l.samples) {
        REQUIRE(std::abs(s.q1_rate + s.w1_rate - s.energy_rate) < 1e-10);
        REQUIRE(std::abs(s.q2_rate + s.w2_rate - s.energy_rate) < 1e-10);
        REQUIRE(std::abs(s.w2_rate - s.w1_rate - s.wprime_rate) < 1e-10);
        REQUIRE(s.sgen_ht_rate.is_finite());
    }
}

TEST_CASE("dephasing ledger") {
    const Trajectory t = integrate(dephasing_model(1.0, 1.0), bloch_to_density(BlochState(0.5, 0, 0.5)), {1e-3, 8, 1});
    const ThermoLedger l = annotate_trajectory(t, {}, {});
    CHECK(l.passed());
    CHECK(std::abs(l.Q1.back()) < 1e-9);
    CHECK(std::abs(l.W1.back()) < 1e-9);
    CHECK(l.Q2.back() > 0.0);
    CHECK(l.Q2.back() == doctest::Approx(-l.W2.back()).epsilon(1e-9));
    // No bath temperature: the boundary rate is not defined.
    CHECK(l.samples.front().sgen_ht_rate.is_undefined());
    CHECK(l.Sgen1.back() > 0.0);
    CHECK(l.Sgen1.back() == doctest::Approx(l.delta_entropy()).epsilon(1e-5));
}

TEST_CASE("two-atom per-atom ledgers") {
    const ComplexMatrix rho0 =
        kron(bloch_to_density(BlochState(0.0, 0.5, 0.8)), bloch_to_density(BlochState(0.0, 0.0, 1.0)));
    const Trajectory t = integrate(two_atom_model(1.0, 0.8, 1.0), rho0, {1e-3, 12.0, 1});
    CHECK_THROWS(annotate_trajectory(t, {}, {0.0}));
    const ThermoLedger a = annotate_trajectory(t, {}, {0.0}, Subsystem::A);
    const ThermoLedger b = annotate_trajectory(t, {}, {0.0}, Subsystem::B);
    CHECK(a.label == "A");
    CHECK(b.label == "B");
    CHECK(a.passed());
    CHECK(b.passed());
    CHECK(a.W2.back() < 0.0);
    // Reduced Bloch vectors come from partial traces.
    const Vec3 ba = pauli_expectations(partial_trace(t.states[500], Subsystem::A));
    CHECK((a.samples[500].bloch - ba).norm() < 1e-15);
    // T_E = 0: no finite boundary rate.
    CHECK(a.samples[10].sgen_ht_rate.is_undefined());
}

TEST_CASE("driven field ramp produces Alicki work and keeps closure") {
    const FieldProtocol ramp{Vec3(0, 0, 1.0), Vec3(0.05, 0, 0.1)};
    const ThermoLedger l = annotate_trajectory(bath_run({0.2, 0.5, 0.4}, 2.0, 3.0), ramp, {2.0});
    CHECK(std::abs(l.W1.back()) > 1e-3);
    CHECK(l.audit("first_law_alicki")->passed);
    CHECK(l.audit("first_law_entropic")->passed);
    for (const auto& s : l.samples) {
        const Vec3 v = ramp.at(s.t).vector();
        REQUIRE(std::abs(s.energy + s.bloch.dot(v)) < 1e-14);
        REQUIRE(std::abs(s.w1_rate + s.bloch.dot(ramp.ramp)) < 1e-14);
    }
}

TEST_CASE("property: random thermal trajectories close both first laws and the Clausius equality") {
    Rng rng(51);
    for (int k = 0; k < 15; ++k) {
        const double T = uniform(rng, 0.3, 20.0);
        // Trapezoid error scales as (k dt)^2 and grows with the curvature of
        // arctanh near pure states; resolve the relaxation rate k.
        const double k_rate = 2.0 / std::expm1(2.0 / T) + 1.0;
        const double dt = std::min(1e-3, 0.005 / k_rate);
        const ThermoLedger l = annotate_trajectory(bath_run(random_bloch(rng, 0.05, 0.85), T, 4.0, dt), {}, {T});
        REQUIRE(l.audit("first_law_alicki")->passed);
        REQUIRE(l.audit("first_law_entropic")->passed);
        REQUIRE(l.audit("clausius_entropic")->passed);
        const double flux = l.audit("clausius_entropic")->residual;
        CHECK(flux <= kClausiusTol);
    }
}

TEST_CASE("corrupted derivatives are caught by the cumulative audit") {
    Trajectory t = bath_run({0.2, 0.5, 0.4}, 10.0, 1.0, 1e-2);
    for (auto& d : t.derivatives) d *= 1.5;
    const ThermoLedger l = annotate_trajectory(t, {}, {10.0});
    CHECK_FALSE(l.passed());
    const LedgerAudit* a = l.audit("first_law_alicki");
    REQUIRE(a != nullptr);
    CHECK_FALSE(a->passed);
    // Energy rates share the corrupted rhodot, so only the cumulative check sees it.
    CHECK(a->residual > kCumulativeClosureTol);
}

TEST_CASE("maximally mixed sample is resolved spectrally") {
    // Start exactly at B = 0 under a hot bath.
    const ThermoLedger l = annotate_trajectory(bath_run({0, 0, 0}, 5.0, 1.0), {}, {5.0});
    CHECK(l.samples.front().spectral_fallback);
    CHECK(l.samples.front().temp2.is_infinite());
    CHECK(l.samples.front().q2_rate == doctest::Approx(l.samples.front().q1_rate));
    CHECK(l.passed());
}
