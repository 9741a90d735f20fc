// control_power.hpp
// What each receiver can recover when the controller stays silent.

#pragma once

#include "bcqt/protocol/corrections.hpp"
#include "bcqt/protocol/input_state.hpp"

namespace bcqt::protocol {

struct ControlPowerResult {
    // Fidelity of the controller-dependent receiver's outcome-averaged state
    // against its target; 0.5 means the averaged state is maximally mixed.
    double controlled_fidelity_without_charlie;
    // Fidelity achieved by the other receiver from the user bits alone.
    double uncontrolled_fidelity_without_charlie;
    // Max over user branches of the trace distance between the dependent
    // receiver's averaged state and I/2.
    double max_trace_distance_to_mixed;
    Receiver charlie_dependent;
};

// Runs steps 1-3 over all 16 user branches, lets the controller measure but
// not announce, applies the controller-independent corrections, and averages
// each receiver's reduced state over the unannounced Bell outcome.
ControlPowerResult control_power(const InputState& input_a,
                                 const InputState& input_b);

} // namespace bcqt::protocol
