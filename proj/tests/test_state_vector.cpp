#include "doctest.h"

#include <cmath>
#include <complex>

#include "bcqt/state_vector.hpp"

#include "support.hpp"

using namespace bcqt;
using testsupport::max_amp_diff;
using testsupport::near;
using testsupport::oracle_project_bell;
using testsupport::random_state;

namespace {
const std::complex<double> I_UNIT(0.0, 1.0);
const double INV_SQRT2 = 1.0 / std::sqrt(2.0);
} // namespace

TEST_CASE("prepare_single builds the requested amplitudes") {
    auto zero = prepare_single<double>(1.0, 0.0);
    CHECK(zero.amplitude(0) == std::complex<double>(1.0));
    CHECK(zero.amplitude(1) == std::complex<double>(0.0));

    auto plus = prepare_single<double>(INV_SQRT2, INV_SQRT2);
    CHECK(near(plus.amplitude(0).real(), INV_SQRT2, 1e-15));
    CHECK(near(plus.amplitude(1).real(), INV_SQRT2, 1e-15));

    auto generic = prepare_single<double>(0.6, 0.8 * I_UNIT);
    CHECK(generic.amplitude(0) == std::complex<double>(0.6));
    CHECK(generic.amplitude(1) == std::complex<double>(0.0, 0.8));
    CHECK(near(generic.amplitudes().squaredNorm(), 1.0, 1e-15));

    CHECK_THROWS_AS(prepare_single<double>(1.0, 1.0), NotNormalized);
}

TEST_CASE("tensor concatenates labels and multiplies amplitudes") {
    auto k0 = StateVector<double>::basis_state({"p"}, 0);
    auto k1 = StateVector<double>::basis_state({"q"}, 1);
    auto k01 = tensor(k0, k1);
    CHECK(k01.labels() == std::vector<QubitLabel>{"p", "q"});
    CHECK(k01.amplitude(0b01) == std::complex<double>(1.0));

    auto pairs = tensor(bell_state<double>(BellOutcome::PhiPlus, "q1", "q2"),
                        bell_state<double>(BellOutcome::PhiPlus, "q3", "q4"));
    int nonzero = 0;
    for (Eigen::Index k = 0; k < pairs.dim(); ++k) {
        if (std::abs(pairs.amplitude(k)) > 1e-15) {
            ++nonzero;
            CHECK(near(pairs.amplitude(k).real(), 0.5, 1e-15));
        }
    }
    CHECK(nonzero == 4);

    CHECK_THROWS_AS(tensor(k0, StateVector<double>::basis_state({"p"}, 0)),
                    DuplicateLabel);
}

TEST_CASE("apply_gate matches the declared conventions") {
    auto plus = apply_gate(StateVector<double>::basis_state({"q"}, 0),
                           Gate::h("q"));
    CHECK(near(plus.amplitude(0).real(), INV_SQRT2, 1e-15));
    CHECK(near(plus.amplitude(1).real(), INV_SQRT2, 1e-15));

    // control |1>_A flips target |0>_a1
    auto s = tensor(StateVector<double>::basis_state({"A"}, 1),
                    StateVector<double>::basis_state({"a1"}, 0));
    auto flipped = apply_gate(s, Gate::cnot("A", "a1"));
    CHECK(flipped.amplitude(0b11) == std::complex<double>(1.0));

    // iY(a0|0> + a1|1>) = a1|0> - a0|1>
    auto generic = prepare_single<double>(0.6, 0.8 * I_UNIT);
    auto rotated = apply_gate(generic, Gate::iy("q"));
    CHECK(near(std::abs(rotated.amplitude(0) - 0.8 * I_UNIT), 0.0, 1e-15));
    CHECK(near(std::abs(rotated.amplitude(1) - std::complex<double>(-0.6)),
               0.0, 1e-15));

    CHECK_THROWS_AS(apply_gate(generic, Gate::x("missing")), UnknownLabel);
    CHECK_THROWS_AS(Gate::cnot("q", "q"), DuplicateLabel);
}

TEST_CASE("gate matrices are unitary") {
    for (GateKind kind : {GateKind::I, GateKind::X, GateKind::iY, GateKind::Z,
                          GateKind::H}) {
        const auto m = gate_matrix<double>(kind);
        const Eigen::Matrix2cd product = m.adjoint() * m;
        CHECK((product - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
              1e-15);
    }
}

TEST_CASE("postselect projects, renormalizes and removes the qubit") {
    auto pair = bell_state<double>(BellOutcome::PhiPlus, "q1", "q2");
    auto projected = postselect(pair, "q1", Basis::Z, 0);
    CHECK(near(projected.probability, 0.5, 1e-15));
    CHECK(projected.state.labels() == std::vector<QubitLabel>{"q2"});
    CHECK(near(std::abs(projected.state.amplitude(0)), 1.0, 1e-15));

    // |+> measured in X can never give |->
    auto plus = prepare_single<double>(INV_SQRT2, INV_SQRT2);
    CHECK_THROWS_AS(postselect(plus, "q", Basis::X, 1), ZeroProbabilityBranch);
    auto kept = postselect(plus, "q", Basis::X, 0);
    CHECK(near(kept.probability, 1.0, 1e-15));
    CHECK(kept.state.num_qubits() == 0);

    // X-basis outcome bit 1 <-> |->
    auto minus = prepare_single<double>(INV_SQRT2, -INV_SQRT2);
    CHECK(near(postselect(minus, "q", Basis::X, 1).probability, 1.0, 1e-15));
}

TEST_CASE("bell measurement identifies each Bell state with certainty") {
    for (BellOutcome outcome : kAllBellOutcomes) {
        auto pair = bell_state<double>(outcome, "q1", "q2");
        auto measured = postselect_bell(pair, "q1", "q2", outcome);
        CHECK(near(measured.probability, 1.0, 1e-12));
        CHECK(measured.state.num_qubits() == 0);

        // any other forced outcome is impossible
        for (BellOutcome other : kAllBellOutcomes) {
            if (other == outcome) continue;
            CHECK_THROWS_AS(postselect_bell(pair, "q1", "q2", other),
                            ZeroProbabilityBranch);
        }
    }
}

TEST_CASE("entanglement swapping agrees with the projector-route oracle") {
    auto pairs = tensor(bell_state<double>(BellOutcome::PhiPlus, "q1", "q2"),
                        bell_state<double>(BellOutcome::PhiPlus, "q3", "q4"));
    for (BellOutcome outcome : kAllBellOutcomes) {
        auto engine = postselect_bell(pairs, "q2", "q3", outcome);
        auto oracle = oracle_project_bell(pairs, "q2", "q3", outcome);
        CHECK(near(engine.probability, 0.25, 1e-12));
        CHECK(near(engine.probability, oracle.probability, 1e-12));
        CHECK(max_amp_diff(engine.state, oracle.state) <= 1e-12);
        // the remaining pair carries the measured Bell state
        CHECK(states_equal_up_to_phase(
            engine.state, bell_state<double>(outcome, "q1", "q4"), 1e-10));
    }
}

TEST_CASE("bell measurement matches the projector oracle on random states") {
    Xoshiro256StarStar rng(314159);
    for (int trial = 0; trial < 40; ++trial) {
        auto s = random_state(rng, 4);
        double total = 0.0;
        for (BellOutcome outcome : kAllBellOutcomes) {
            auto oracle = oracle_project_bell(s, "q1", "q2", outcome);
            auto engine = postselect_bell(s, "q1", "q2", outcome);
            CHECK(near(engine.probability, oracle.probability, 1e-12));
            CHECK(max_amp_diff(engine.state, oracle.state) <= 1e-11);
            total += engine.probability;
        }
        CHECK(near(total, 1.0, 1e-12));
    }
}

TEST_CASE("unitarity and involution properties") {
    Xoshiro256StarStar rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        auto s = random_state(rng, n);
        const auto q = s.labels()[rng.next() % n];
        QubitLabel q2 = s.labels()[rng.next() % n];
        while (q2 == q) q2 = s.labels()[rng.next() % n];

        for (GateKind kind : {GateKind::X, GateKind::Z, GateKind::H}) {
            const Gate g{kind, q, {}};
            auto once = apply_gate(s, g);
            CHECK(near(once.amplitudes().norm(), 1.0, 1e-12));
            CHECK(max_amp_diff(apply_gate(once, g), s) <= 1e-12);
        }
        const auto cnot = Gate::cnot(q2, q);
        CHECK(max_amp_diff(apply_gate(apply_gate(s, cnot), cnot), s) <= 1e-12);

        // iY twice negates the state
        auto twice = apply_gate(apply_gate(s, Gate::iy(q)), Gate::iy(q));
        CHECK((twice.amplitudes() + s.amplitudes()).cwiseAbs().maxCoeff() <=
              1e-12);
    }
}

TEST_CASE("born probabilities are complete") {
    Xoshiro256StarStar rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 4);
        auto s = random_state(rng, n);
        const auto q = s.labels()[rng.next() % n];
        for (Basis basis : {Basis::Z, Basis::X}) {
            double total = 0.0;
            for (int outcome : {0, 1}) {
                try {
                    total += postselect(s, q, basis, outcome).probability;
                } catch (const ZeroProbabilityBranch&) {
                }
            }
            CHECK(near(total, 1.0, 1e-12));
        }
    }
}

TEST_CASE("sampling agrees exactly with forced post-selection") {
    Xoshiro256StarStar rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 4);
        auto s = random_state(rng, n);
        const auto q = s.labels()[rng.next() % n];
        const Basis basis = (rng.next() & 1) ? Basis::Z : Basis::X;
        auto sampled = measure(s, q, basis, rng);
        auto forced = postselect(s, q, basis, sampled.outcome);
        CHECK(sampled.probability == forced.probability);
        CHECK((sampled.state.amplitudes() == forced.state.amplitudes()));
    }
}

TEST_CASE("sampled bell measurement agrees with the forced variant") {
    Xoshiro256StarStar rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_state(rng, 3);
        auto sampled = measure_bell(s, "q0", "q2", rng);
        auto forced = postselect_bell(s, "q0", "q2", sampled.outcome);
        CHECK(sampled.probability == forced.probability);
        CHECK((sampled.state.amplitudes() == forced.state.amplitudes()));
    }
}

TEST_CASE("label order is a presentation detail") {
    Xoshiro256StarStar rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_state(rng, 3);
        std::vector<QubitLabel> shuffled = s.labels();
        std::swap(shuffled[0], shuffled[2]);
        auto permuted = reordered(s, shuffled);
        CHECK(near(std::abs(inner_product(s, permuted)), 1.0, 1e-12));
        for (const auto& q : s.labels()) {
            const auto p_direct = postselect(s, q, Basis::Z, 0).probability;
            const auto p_permuted =
                postselect(permuted, q, Basis::Z, 0).probability;
            CHECK(near(p_direct, p_permuted, 1e-12));
        }
    }
}

TEST_CASE("states_equal_up_to_phase ignores global phase only") {
    auto s = prepare_single<double>(0.6, 0.8 * I_UNIT);
    auto negated = StateVector<double>({"q"}, -s.amplitudes());
    CHECK(states_equal_up_to_phase(s, negated, 1e-12));
    CHECK_FALSE(states_equal_up_to_phase(
        StateVector<double>::basis_state({"q"}, 0),
        StateVector<double>::basis_state({"q"}, 1), 1e-12));

    auto other = prepare_single<double>(0.8, 0.6);
    CHECK_THROWS_AS(
        states_equal_up_to_phase(s, bell_state<double>(BellOutcome::PhiPlus,
                                                       "a", "b"),
                                 1e-12),
        DimensionMismatch);
    CHECK_FALSE(states_equal_up_to_phase(s, other, 1e-12));
}

TEST_CASE("the engine also instantiates for float") {
    auto plus = apply_gate(StateVector<float>::basis_state({"q"}, 0),
                           Gate::h("q"));
    CHECK(near(plus.amplitudes().norm(), 1.0, 1e-6));
    auto projected = postselect(plus, "q", Basis::X, 0);
    CHECK(near(projected.probability, 1.0, 1e-6));
}
