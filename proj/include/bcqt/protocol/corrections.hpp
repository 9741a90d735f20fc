// corrections.hpp
// The 64-entry recovery table, derived by brute force rather than copied from
// any reference: for every branch, the unique Pauli pair that restores both
// payloads on a generic probe input, revalidated on 20 random input pairs.

#pragma once

#include <array>

#include "bcqt/protocol/input_state.hpp"
#include "bcqt/protocol/outcome.hpp"

namespace bcqt::protocol {

// Which receiving qubit needs the controller's announcement.
enum class Receiver { B1, A2 };

inline const char* receiver_qubit_name(Receiver r) {
    return r == Receiver::B1 ? "b1" : "a2";
}

// b1 is held by Bob, a2 by Alice.
inline const char* receiver_party_name(Receiver r) {
    return r == Receiver::B1 ? "bob" : "alice";
}

class CorrectionTable {
public:
    // Brute-force derivation; throws NoValidCorrection / AmbiguousCorrection
    // if any branch fails to resolve to exactly one Pauli pair.
    static CorrectionTable derive();

    const PauliCorrection& at(const OutcomeRecord& rec) const {
        return entries_[branch_index(rec)];
    }

    const PauliCorrection& at(int user_branch, BellOutcome bell) const {
        return entries_[user_branch * 4 + bell_index(bell)];
    }

    // Correction available without the controller's announcement: the entry
    // is well defined for b1 (constant across Bell outcomes); for a2 it is
    // the controller-independent part of the recovery.
    PauliCorrection without_charlie(int user_branch) const {
        return at(user_branch, BellOutcome::PhiPlus);
    }

    bool b1_constant_across_bell() const;
    bool a2_constant_across_bell() const;

    // The receiver whose correction varies with the Bell outcome. Throws if
    // the dependence is not one-sided (which would falsify the one-direction
    // control property).
    Receiver charlie_dependent_receiver() const;

    const std::array<PauliCorrection, 64>& entries() const { return entries_; }

private:
    std::array<PauliCorrection, 64> entries_{};
};

// Shared, lazily derived instance.
const CorrectionTable& standard_correction_table();

// Table lookup for a complete outcome record.
PauliCorrection resolve_corrections(const OutcomeRecord& rec);

// Fixed generic probe input pair used for table derivation: nonzero real and
// imaginary parts, |a0| != |a1|, to break Pauli degeneracies.
InputState probe_input_alice();
InputState probe_input_bob();

} // namespace bcqt::protocol
