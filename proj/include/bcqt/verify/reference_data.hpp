// reference_data.hpp
// Hand-transcribed reference data for the protocol definition, kept as plain
// term lists so the checkers stay table-agnostic and the transcription is
// reviewable: the 16-row collapse table for the users' measurements, the
// Hadamard expansion and Bell regrouping of the reference branch, and the
// per-outcome correction assignment.

#pragma once

#include <array>

#include "bcqt/bell.hpp"
#include "bcqt/gates.hpp"
#include "bcqt/protocol/input_state.hpp"
#include "bcqt/state_vector.hpp"

namespace bcqt::verify {

// Coefficient index over the payload amplitudes: 0 = a0*b0, 1 = a0*b1,
// 2 = a1*b0, 3 = a1*b1.
struct CollapseTerm {
    int coeff;
    int sign;     // +1 or -1
    unsigned ket; // 4 bits, |b1 c1 a2 c2>, b1 most significant
};

struct CollapseRow {
    int alice_z, alice_x, bob_z, bob_x;
    std::array<CollapseTerm, 8> terms;
};

// The 16 collapse states keyed by the users' outcomes, copied verbatim from
// the reference table (kets unnormalized, coefficients omitted).
const std::array<CollapseRow, 16>& collapse_reference();

struct SignedKet {
    int sign;
    unsigned ket; // 4 bits, |b1 c1 a2 c2>
};

struct HadamardExpansionGroup {
    int coeff; // same coefficient indexing as CollapseTerm
    std::array<SignedKet, 8> kets;
};

// Reference expansion of the (0,+,0,+) branch after the controller's two
// Hadamards.
const std::array<HadamardExpansionGroup, 4>& hadamard_expansion_reference();

// Reference product factors on (b1, a2) after projecting (c1, c2) onto each
// Bell state: b1 always carries (a0, a1); a2 carries a signed permutation of
// (b0, b1) described by (index, sign) per amplitude slot.
struct RegroupedTerm {
    BellOutcome outcome;
    int a2_index0, a2_sign0; // amplitude of |0> on a2
    int a2_index1, a2_sign1; // amplitude of |1> on a2
};

const std::array<RegroupedTerm, 4>& bell_regrouping_reference();

// Reference recovery assignment for the (0,+,0,+) branch: one operation for
// Bob (on b1) and one for Alice (on a2) per Bell outcome.
struct CorrectionReferenceCell {
    BellOutcome outcome;
    PauliOp bob_on_b1;
    PauliOp alice_on_a2;
};

const std::array<CorrectionReferenceCell, 4>& correction_reference();

// Instantiate a collapse row (or the Hadamard expansion) with concrete
// payload amplitudes; the result is normalized on labels (b1, c1, a2, c2).
StateVector<double> instantiate_collapse_row(const CollapseRow& row,
                                             const protocol::InputState& in_a,
                                             const protocol::InputState& in_b);

StateVector<double>
instantiate_hadamard_expansion(const protocol::InputState& in_a,
                               const protocol::InputState& in_b);

// The (b1, a2) product state named by a regrouping term.
StateVector<double> instantiate_regrouped_term(const RegroupedTerm& term,
                                               const protocol::InputState& in_a,
                                               const protocol::InputState& in_b);

} // namespace bcqt::verify
