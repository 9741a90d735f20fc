// outcome.hpp
// Classical outcome records and Pauli correction pairs.

#pragma once

#include <optional>

#include "bcqt/bell.hpp"
#include "bcqt/gates.hpp"

namespace bcqt::protocol {

// The classical transcript content of one protocol run. Z outcomes are the
// usual bits; X outcomes use 0 <-> |+>, 1 <-> |->. charlie_bell is absent
// exactly when the controller withholds cooperation.
struct OutcomeRecord {
    int alice_z = 0;
    int alice_x = 0;
    int bob_z = 0;
    int bob_x = 0;
    std::optional<BellOutcome> charlie_bell;

    friend bool operator==(const OutcomeRecord&,
                           const OutcomeRecord&) = default;
};

// Index 0..15 over the users' four measurement bits.
inline int user_branch_index(int alice_z, int alice_x, int bob_z, int bob_x) {
    return (((alice_z * 2 + alice_x) * 2 + bob_z) * 2) + bob_x;
}

inline int user_branch_index(const OutcomeRecord& rec) {
    return user_branch_index(rec.alice_z, rec.alice_x, rec.bob_z, rec.bob_x);
}

inline OutcomeRecord outcome_from_user_branch(int index) {
    OutcomeRecord rec;
    rec.alice_z = (index >> 3) & 1;
    rec.alice_x = (index >> 2) & 1;
    rec.bob_z = (index >> 1) & 1;
    rec.bob_x = index & 1;
    return rec;
}

// Index 0..63 over the full branch (user bits plus controller outcome).
inline int branch_index(const OutcomeRecord& rec) {
    if (!rec.charlie_bell)
        throw MissingCharlieOutcome("branch_index needs charlie_bell");
    return user_branch_index(rec) * 4 + bell_index(*rec.charlie_bell);
}

inline OutcomeRecord outcome_from_branch_index(int index) {
    OutcomeRecord rec = outcome_from_user_branch(index / 4);
    rec.charlie_bell = kAllBellOutcomes[index % 4];
    return rec;
}

// The recovery operations: on_b1 restores Alice's payload at Bob's side,
// on_a2 restores Bob's payload at Alice's side.
struct PauliCorrection {
    PauliOp on_b1 = PauliOp::I;
    PauliOp on_a2 = PauliOp::I;

    friend bool operator==(const PauliCorrection&,
                           const PauliCorrection&) = default;
};

} // namespace bcqt::protocol
