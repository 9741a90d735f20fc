// run.hpp
// End-to-end protocol execution: channel, entangling CNOTs, user
// measurements, controller Bell measurement, recovery.

#pragma once

#include "bcqt/density_matrix.hpp"
#include "bcqt/protocol/corrections.hpp"
#include "bcqt/protocol/steps.hpp"
#include "bcqt/protocol/transcript.hpp"

namespace bcqt::protocol {

struct ProtocolResult {
    Transcript transcript;
    OutcomeRecord outcome;     // charlie_bell always set
    PauliCorrection correction;
    StateVector<double> final_b1; // 1-qubit state received by Bob
    StateVector<double> final_a2; // 1-qubit state received by Alice
    double fidelity_b1_vs_A;
    double fidelity_a2_vs_B;
    double branch_probability;
};

// Forced mode: every measurement outcome is post-selected from `forced`
// (charlie_bell must be present).
ProtocolResult run_protocol(const InputState& input_a, const InputState& input_b,
                            const OutcomeRecord& forced);

// Sampled mode: outcomes drawn with Born probabilities from `rng`.
ProtocolResult run_protocol(const InputState& input_a, const InputState& input_b,
                            Xoshiro256StarStar& rng);

} // namespace bcqt::protocol
