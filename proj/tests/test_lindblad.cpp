// test_lindblad.cpp — generators: occupation, fixed points, Bloch equations, two-atom dissipator

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "generators.hpp"
#include "qbt/lindblad.hpp"

using namespace qbt;
using namespace qbt::testing;

namespace {

ComplexMatrix gibbs(double eps, double T) {
    ComplexMatrix g = ComplexMatrix::Zero(2, 2);
    const double z = std::exp(eps / T) + std::exp(-eps / T);
    g(0, 0) = std::exp(eps / T) / z;
    g(1, 1) = std::exp(-eps / T) / z;
    return g;
}

// Two-atom dissipator as the explicit double sum over k, l in {A, B}.
ComplexMatrix double_sum_dissipator(const ComplexMatrix& rho, double gamma0, double g) {
    ComplexMatrix lo(2, 2);
    lo << 0, 1, 0, 0;
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix s[2] = {kron(lo, id), kron(id, lo)};
    const double rates[2][2] = {{gamma0, g * gamma0}, {g * gamma0, gamma0}};
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            const ComplexMatrix kl = s[k].adjoint() * s[l];
            out += rates[k][l] * (s[l] * rho * s[k].adjoint() - 0.5 * (kl * rho + rho * kl));
        }
    }
    return out;
}

} // namespace

TEST_CASE("Planck occupation") {
    CHECK(planck_occupation(std::numeric_limits<double>::infinity()) == 0.0);
    CHECK(planck_occupation(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(planck_occupation(0.2) == doctest::Approx(1.0 / (std::exp(0.2) - 1.0)).epsilon(1e-14));
    CHECK(planck_occupation(0.2) == doctest::Approx(4.516656).epsilon(1e-7));
    CHECK_THROWS_AS(planck_occupation(0.0), std::invalid_argument);
    CHECK_THROWS_AS(planck_occupation(-1.0), std::invalid_argument);
    double prev = planck_occupation(0.01);
    for (double x = 0.02; x < 20.0; x *= 1.3) {
        const double n = planck_occupation(x);
        CHECK(n < prev);
        prev = n;
    }
}

TEST_CASE("thermal bath channel structure") {
    const LindbladModel cold = thermal_bath_model(1.0, 0.0, 1.0);
    REQUIRE(cold.jumps().size() == 1);
    CHECK(cold.jumps()[0].rate == doctest::Approx(1.0));
    // Emission takes |e> = (0,1) to |g> = (1,0).
    Eigen::VectorXcd e(2);
    e << 0, 1;
    const Eigen::VectorXcd out = cold.jumps()[0].op * e;
    CHECK(std::abs(out(0)) == doctest::Approx(1.0));
    CHECK(std::abs(out(1)) == doctest::Approx(0.0));

    const LindbladModel warm = thermal_bath_model(1.0, 10.0, 1.0);
    REQUIRE(warm.jumps().size() == 2);
    const double n = 1.0 / std::expm1(0.2);
    CHECK(warm.jumps()[0].rate + warm.jumps()[1].rate == doctest::Approx(2 * n + 1).epsilon(1e-14));
}

TEST_CASE("property: Gibbs state is a fixed point for ten bath temperatures") {
    for (double T : {0.05, 0.1, 0.3, 0.5, 1.0, 2.0, 3.7, 10.0, 25.0, 100.0}) {
        for (Picture p : {Picture::interaction, Picture::schrodinger}) {
            for (double eps : {0.5, 1.0, 2.0}) {
                const LindbladModel m = thermal_bath_model(1.3, T, eps, p);
                REQUIRE(max_abs(m.rhs(gibbs(eps, T))) < 1e-12);
            }
        }
    }
}

TEST_CASE("thermal bath Bloch equations") {
    const double n = 1.0 / std::expm1(0.2);
    const ComplexMatrix rho = bloch_to_density(BlochState(0.2, 0.5, 0.4));
    const Vec3 bdot = pauli_expectations(thermal_bath_model(1.0, 10.0, 1.0).rhs(rho));
    const double k = 2 * n + 1;
    CHECK(bdot.x() == doctest::Approx(-k * 0.2 / 2).epsilon(1e-13));
    CHECK(bdot.y() == doctest::Approx(-k * 0.5 / 2).epsilon(1e-13));
    CHECK(bdot.z() == doctest::Approx(1 - k * 0.4).epsilon(1e-13));
    CHECK(bdot.x() == doctest::Approx(-1.003331).epsilon(1e-6));
    CHECK(bdot.y() == doctest::Approx(-2.508328).epsilon(1e-6));
    CHECK(bdot.z() == doctest::Approx(-3.013325).epsilon(1e-6));
    CHECK(k / 2 == doctest::Approx(5.016656).epsilon(1e-6));
}

TEST_CASE("dephasing generator") {
    const LindbladModel m = dephasing_model(1.0, 1.0);
    CHECK(max_abs(m.rhs(bloch_to_density(BlochState(0, 0, 0.3)))) < 1e-15);
    const Vec3 bdot = pauli_expectations(m.rhs(bloch_to_density(BlochState(0.5, 0, 0.5))));
    CHECK(bdot.x() == doctest::Approx(-0.5));
    CHECK(bdot.y() == doctest::Approx(0.0));
    CHECK(bdot.z() == doctest::Approx(0.0));
    const Vec3 b2 = pauli_expectations(dephasing_model(2.5, 1.0).rhs(bloch_to_density(BlochState(0.1, -0.3, 0.2))));
    CHECK(b2.x() == doctest::Approx(-0.25));
    CHECK(b2.y() == doctest::Approx(0.75));
}

TEST_CASE("property: Hamiltonian-only qubit precesses as dB/dt = 2 B x v") {
    Rng rng(21);
    for (int k = 0; k < 500; ++k) {
        const Vec3 b = random_bloch(rng);
        const Vec3 v = random_field(rng).vector();
        const LindbladModel m(qubit_hamiltonian(v), {}, "precession");
        const Vec3 bdot = pauli_expectations(m.rhs(bloch_to_density(BlochState(b))));
        REQUIRE((bdot - 2.0 * b.cross(v)).norm() < 1e-12);
    }
}

TEST_CASE("two-atom collective channels") {
    const LindbladModel m = two_atom_model(1.0, 0.8, 1.0);
    REQUIRE(m.jumps().size() == 2);
    std::vector<double> rates{m.jumps()[0].rate, m.jumps()[1].rate};
    std::sort(rates.begin(), rates.end());
    CHECK(rates[0] == doctest::Approx(0.2));
    CHECK(rates[1] == doctest::Approx(1.8));

    ComplexMatrix gg = ComplexMatrix::Zero(4, 4);
    gg(0, 0) = 1.0;
    CHECK(max_abs(m.rhs(gg)) < 1e-15);
}

TEST_CASE("property: collective channels reproduce the double-sum dissipator") {
    Rng rng(22);
    for (int k = 0; k < 200; ++k) {
        const double g = uniform(rng, 0.0, 1.0);
        const double gamma0 = uniform(rng, 0.1, 3.0);
        const ComplexMatrix rho = random_density(rng, 4);
        REQUIRE(max_abs(two_atom_model(gamma0, g, 1.0).rhs(rho) - double_sum_dissipator(rho, gamma0, g)) < 1e-13);
    }
}

TEST_CASE("decoupled two-atom limit is two independent amplitude-damping channels") {
    Rng rng(23);
    const LindbladModel single = thermal_bath_model(1.0, 0.0, 1.0);
    const ComplexMatrix ra = bloch_to_density(BlochState(random_bloch(rng)));
    const ComplexMatrix rb = bloch_to_density(BlochState(random_bloch(rng)));
    const ComplexMatrix expected = kron(single.rhs(ra), rb) + kron(ra, single.rhs(rb));
    CHECK(max_abs(two_atom_model(1.0, 0.0, 1.0).rhs(kron(ra, rb)) - expected) < 1e-14);
}

TEST_CASE("exchange unitary model") {
    const LindbladModel m = exchange_unitary_model(0.7);
    CHECK(m.jumps().empty());
    ComplexMatrix gg = ComplexMatrix::Zero(4, 4);
    gg(0, 0) = 1.0;
    CHECK(max_abs(m.rhs(gg)) < 1e-15);
    CHECK_THROWS_AS(exchange_unitary_model(0.0), std::invalid_argument);
}

TEST_CASE("property: generator output is traceless and Hermitian") {
    Rng rng(24);
    for (int k = 0; k < 300; ++k) {
        const ComplexMatrix r2 = random_density(rng, 2);
        const ComplexMatrix r4 = random_density(rng, 4);
        for (const LindbladModel& m :
             {thermal_bath_model(uniform(rng, 0.1, 2), uniform(rng, 0, 20), uniform(rng, 0.3, 2), Picture::schrodinger),
              dephasing_model(uniform(rng, 0.1, 2), 1.0)}) {
            const ComplexMatrix d = m.rhs(r2);
            REQUIRE(std::abs(d.trace()) < 1e-12);
            REQUIRE(max_abs(d - d.adjoint()) < 1e-12);
        }
        for (const LindbladModel& m : {two_atom_model(1.0, uniform(rng, 0, 1), 1.0), exchange_unitary_model(1.3)}) {
            const ComplexMatrix d = m.rhs(r4);
            REQUIRE(std::abs(d.trace()) < 1e-12);
            REQUIRE(max_abs(d - d.adjoint()) < 1e-12);
        }
    }
}

TEST_CASE("model validation") {
    CHECK_THROWS(LindbladModel(ComplexMatrix::Zero(2, 2), {{lowering(), -1.0, "bad"}}, "neg"));
    CHECK_THROWS(LindbladModel(ComplexMatrix::Zero(2, 2), {{ComplexMatrix::Zero(4, 4), 1.0, "dim"}}, "dim"));
    CHECK_THROWS(two_atom_model(1.0, 1.5, 1.0));
    CHECK_THROWS(dephasing_model(-1.0, 1.0));
}
