// steps.hpp
// The four protocol steps over three EPR pairs.
//
// Register layout (first label = most significant index bit):
//   a1 b1 c1 a2 c2 b2 A B
// The channel entangles the pairs (a1,b1), (c1,a2), (c2,b2); a1/a2 sit with
// Alice, b1/b2 with Bob, c1/c2 with the controller. A and B are the payload
// qubits of Alice and Bob.

#pragma once

#include <optional>

#include "bcqt/protocol/input_state.hpp"
#include "bcqt/protocol/outcome.hpp"
#include "bcqt/rng.hpp"
#include "bcqt/state_vector.hpp"

namespace bcqt::protocol {

namespace reg {
inline const QubitLabel a1("a1"), b1("b1"), c1("c1"), a2("a2"), c2("c2"),
    b2("b2"), A("A"), B("B");
} // namespace reg

// Step 1: the shared channel, |phi+> on each of the three pairs. Six qubits,
// eight nonzero amplitudes of 1/(2*sqrt(2)) each.
StateVector<double> build_channel();

// Joint state of channel and both payloads, on (a1,b1,c1,a2,c2,b2,A,B).
StateVector<double> compose_system(const StateVector<double>& channel,
                                   const InputState& input_a,
                                   const InputState& input_b);

// Step 2: each user entangles their payload with their channel half,
// CNOT(A -> a1) and CNOT(B -> b2).
StateVector<double> step2_cnots(const StateVector<double>& s);

struct Step3Result {
    OutcomeRecord outcome; // charlie_bell not set
    double probability;
    StateVector<double> state; // on (b1, c1, a2, c2)
};

// Step 3: Alice measures a1 in Z and A in X; Bob measures b2 in Z and B in X.
Step3Result step3_measure(const StateVector<double>& s,
                          const OutcomeRecord& forced);
Step3Result step3_measure(const StateVector<double>& s,
                          Xoshiro256StarStar& rng);

struct Step4Result {
    std::optional<BellOutcome> outcome;
    double probability;
    StateVector<double> state; // on (b1, a2) when cooperating
};

// Step 4: if the controller cooperates, Hadamards on c1 and c2 followed by a
// Bell measurement of (c1, c2); otherwise the state passes through untouched.
Step4Result step4_charlie(const StateVector<double>& s, bool cooperate,
                          BellOutcome forced);
Step4Result step4_charlie(const StateVector<double>& s, bool cooperate,
                          Xoshiro256StarStar& rng);

} // namespace bcqt::protocol
