// support.hpp
// Shared test utilities: random state generators and independent oracle
// implementations (dense projector arithmetic, closed-form correction
// formulas) used to cross-check the engine and protocol code paths.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bcqt/density_matrix.hpp"
#include "bcqt/protocol/input_state.hpp"
#include "bcqt/protocol/outcome.hpp"
#include "bcqt/rng.hpp"
#include "bcqt/state_vector.hpp"

namespace testsupport {

using bcqt::BellOutcome;
using bcqt::PauliOp;
using bcqt::QubitLabel;
using bcqt::StateVector;
using bcqt::Xoshiro256StarStar;

inline bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline double max_amp_diff(const StateVector<double>& a,
                           const StateVector<double>& b) {
    return (a.amplitudes() - bcqt::reordered(b, a.labels()).amplitudes())
        .cwiseAbs()
        .maxCoeff();
}

inline std::vector<QubitLabel> generic_labels(int n) {
    std::vector<QubitLabel> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i)
        labels.push_back("q" + std::to_string(i));
    return labels;
}

inline StateVector<double> random_state(Xoshiro256StarStar& rng,
                                        std::vector<QubitLabel> labels) {
    Eigen::VectorXcd amps(Eigen::Index(1) << labels.size());
    for (Eigen::Index k = 0; k < amps.size(); ++k)
        amps(k) = std::complex<double>(rng.normal(), rng.normal());
    amps.normalize();
    return StateVector<double>(std::move(labels), std::move(amps));
}

inline StateVector<double> random_state(Xoshiro256StarStar& rng, int n) {
    return random_state(rng, generic_labels(n));
}

// --- projector-route Bell measurement oracle ---------------------------------
// Projects (q1, q2) onto a Bell state by direct basis arithmetic, with no
// gates involved; independent of the engine's CNOT+H implementation.

inline std::complex<double> bell_coefficient(BellOutcome outcome, int x, int y) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (outcome) {
    case BellOutcome::PhiPlus:
        return x == y ? std::complex<double>(h) : 0.0;
    case BellOutcome::PhiMinus:
        return x == y ? std::complex<double>(x ? -h : h) : 0.0;
    case BellOutcome::PsiPlus:
        return x != y ? std::complex<double>(h) : 0.0;
    case BellOutcome::PsiMinus:
        return x != y ? std::complex<double>(x ? -h : h) : 0.0;
    }
    return 0.0;
}

struct OracleProjection {
    double probability;
    StateVector<double> state;
};

inline OracleProjection oracle_project_bell(const StateVector<double>& s,
                                            const QubitLabel& q1,
                                            const QubitLabel& q2,
                                            BellOutcome outcome) {
    const int sh1 = s.bit_shift(q1);
    const int sh2 = s.bit_shift(q2);
    const int hi = std::max(sh1, sh2);
    const int lo = std::min(sh1, sh2);

    const auto drop = [](Eigen::Index k, int shift) {
        const Eigen::Index low = k & ((Eigen::Index(1) << shift) - 1);
        return ((k >> (shift + 1)) << shift) | low;
    };

    Eigen::VectorXcd reduced = Eigen::VectorXcd::Zero(s.dim() / 4);
    for (Eigen::Index k = 0; k < s.dim(); ++k) {
        const int x = static_cast<int>((k >> sh1) & 1);
        const int y = static_cast<int>((k >> sh2) & 1);
        const auto c = std::conj(bell_coefficient(outcome, x, y));
        if (c == 0.0) continue;
        reduced(drop(drop(k, hi), lo)) += c * s.amplitude(k);
    }
    const double prob = reduced.squaredNorm();
    reduced /= std::sqrt(prob);

    std::vector<QubitLabel> labels;
    for (const auto& q : s.labels())
        if (q != q1 && q != q2) labels.push_back(q);
    return {prob, StateVector<double>(std::move(labels), std::move(reduced))};
}

// --- closed-form correction oracle -------------------------------------------
// Derived by hand from the channel structure: b1 arrives as X^z Z^x applied
// to Alice's payload, so its recovery depends on her bits alone; a2 arrives
// as P(bell) X^zb Z^xb applied to Bob's payload, where the Bell measurement
// contributes an extra X for phi-/psi- and an extra Z for psi+/psi-.

inline PauliOp pauli_from_powers(int x_power, int z_power) {
    if (x_power && z_power) return PauliOp::iY;
    if (x_power) return PauliOp::X;
    if (z_power) return PauliOp::Z;
    return PauliOp::I;
}

inline PauliOp expected_b1_correction(int alice_z, int alice_x) {
    return pauli_from_powers(alice_z, alice_x);
}

inline PauliOp expected_a2_correction(int bob_z, int bob_x, BellOutcome bell) {
    const int swap_x =
        bell == BellOutcome::PhiMinus || bell == BellOutcome::PsiMinus;
    const int swap_z =
        bell == BellOutcome::PsiPlus || bell == BellOutcome::PsiMinus;
    return pauli_from_powers(bob_z ^ swap_x, bob_x ^ swap_z);
}

// --- analytic post-step-3 state ----------------------------------------------
// The collapse state on (b1, c1, a2, c2) predicted from the channel algebra:
// sum over payload bits (A, B) of a_A b_B (-1)^(A x_A + B x_B)
// |A ^ z_A> (|00> + |11>) |B ^ z_B>.

inline StateVector<double>
analytic_step3_state(const bcqt::protocol::InputState& in_a,
                     const bcqt::protocol::InputState& in_b,
                     const bcqt::protocol::OutcomeRecord& rec) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
    const std::complex<double> a_amps[2] = {in_a.amp0(), in_a.amp1()};
    const std::complex<double> b_amps[2] = {in_b.amp0(), in_b.amp1()};
    for (int A = 0; A < 2; ++A) {
        for (int B = 0; B < 2; ++B) {
            const double sign =
                ((A & rec.alice_x) ^ (B & rec.bob_x)) ? -1.0 : 1.0;
            const auto coeff = sign * a_amps[A] * b_amps[B];
            const int b1 = A ^ rec.alice_z;
            const int c2 = B ^ rec.bob_z;
            for (int c = 0; c < 2; ++c)
                amps((b1 << 3) | (c << 2) | (c << 1) | c2) += coeff;
        }
    }
    return StateVector<double>::from_unnormalized({"b1", "c1", "a2", "c2"},
                                                  amps);
}

} // namespace testsupport
