#include "bcqt/verify/reference_data.hpp"

#include <complex>

namespace bcqt::verify {

namespace {

// Shorthand for ket bit patterns |b1 c1 a2 c2>.
constexpr unsigned K(unsigned b1, unsigned c1, unsigned a2, unsigned c2) {
    return (b1 << 3) | (c1 << 2) | (a2 << 1) | c2;
}

} // namespace

const std::array<CollapseRow, 16>& collapse_reference() {
    // Rows are transcribed as printed. Rows 9-12 are internally inconsistent
    // with the protocol's own gate sequence (the ket pairs of the a1*b0 and
    // a1*b1 groups are swapped); the checker reports them as mismatches
    // rather than silently correcting the data.
    static const std::array<CollapseRow, 16> rows = {{
        // (0,+,0,+)
        {0, 0, 0, 0,
         {{{0, +1, 0b0000}, {0, +1, 0b0110}, {1, +1, 0b0001}, {1, +1, 0b0111},
           {2, +1, 0b1000}, {2, +1, 0b1110}, {3, +1, 0b1001}, {3, +1, 0b1111}}}},
        // (0,+,0,-)
        {0, 0, 0, 1,
         {{{0, +1, 0b0000}, {0, +1, 0b0110}, {1, -1, 0b0001}, {1, -1, 0b0111},
           {2, +1, 0b1000}, {2, +1, 0b1110}, {3, -1, 0b1001}, {3, -1, 0b1111}}}},
        // (0,-,0,+)
        {0, 1, 0, 0,
         {{{0, +1, 0b0000}, {0, +1, 0b0110}, {1, +1, 0b0001}, {1, +1, 0b0111},
           {2, -1, 0b1000}, {2, -1, 0b1110}, {3, -1, 0b1001}, {3, -1, 0b1111}}}},
        // (0,-,0,-)
        {0, 1, 0, 1,
         {{{0, +1, 0b0000}, {0, +1, 0b0110}, {1, -1, 0b0001}, {1, -1, 0b0111},
           {2, -1, 0b1000}, {2, -1, 0b1110}, {3, +1, 0b1001}, {3, +1, 0b1111}}}},
        // (0,+,1,+)
        {0, 0, 1, 0,
         {{{0, +1, 0b0001}, {0, +1, 0b0111}, {1, +1, 0b0000}, {1, +1, 0b0110},
           {2, +1, 0b1001}, {2, +1, 0b1111}, {3, +1, 0b1000}, {3, +1, 0b1110}}}},
        // (0,+,1,-)
        {0, 0, 1, 1,
         {{{0, +1, 0b0001}, {0, +1, 0b0111}, {1, -1, 0b0000}, {1, -1, 0b0110},
           {2, +1, 0b1001}, {2, +1, 0b1111}, {3, -1, 0b1000}, {3, -1, 0b1110}}}},
        // (0,-,1,+)
        {0, 1, 1, 0,
         {{{0, +1, 0b0001}, {0, +1, 0b0111}, {1, +1, 0b0000}, {1, +1, 0b0110},
           {2, -1, 0b1001}, {2, -1, 0b1111}, {3, -1, 0b1000}, {3, -1, 0b1110}}}},
        // (0,-,1,-)
        {0, 1, 1, 1,
         {{{0, +1, 0b0001}, {0, +1, 0b0111}, {1, -1, 0b0000}, {1, -1, 0b0110},
           {2, -1, 0b1001}, {2, -1, 0b1111}, {3, +1, 0b1000}, {3, +1, 0b1110}}}},
        // (1,+,0,+)
        {1, 0, 0, 0,
         {{{0, +1, 0b1000}, {0, +1, 0b1110}, {1, +1, 0b1001}, {1, +1, 0b1111},
           {2, +1, 0b0001}, {2, +1, 0b0111}, {3, +1, 0b0000}, {3, +1, 0b0110}}}},
        // (1,+,0,-)
        {1, 0, 0, 1,
         {{{0, +1, 0b1000}, {0, +1, 0b1110}, {1, -1, 0b1001}, {1, -1, 0b1111},
           {2, +1, 0b0001}, {2, +1, 0b0111}, {3, -1, 0b0000}, {3, -1, 0b0110}}}},
        // (1,-,0,+)
        {1, 1, 0, 0,
         {{{0, +1, 0b1000}, {0, +1, 0b1110}, {1, +1, 0b1001}, {1, +1, 0b1111},
           {2, -1, 0b0001}, {2, -1, 0b0111}, {3, -1, 0b0000}, {3, -1, 0b0110}}}},
        // (1,-,0,-)
        {1, 1, 0, 1,
         {{{0, +1, 0b1000}, {0, +1, 0b1110}, {1, -1, 0b1001}, {1, -1, 0b1111},
           {2, -1, 0b0001}, {2, -1, 0b0111}, {3, +1, 0b0000}, {3, +1, 0b0110}}}},
        // (1,+,1,+)
        {1, 0, 1, 0,
         {{{0, +1, 0b1001}, {0, +1, 0b1111}, {1, +1, 0b1000}, {1, +1, 0b1110},
           {2, +1, 0b0001}, {2, +1, 0b0111}, {3, +1, 0b0000}, {3, +1, 0b0110}}}},
        // (1,+,1,-)
        {1, 0, 1, 1,
         {{{0, +1, 0b1001}, {0, +1, 0b1111}, {1, -1, 0b1000}, {1, -1, 0b1110},
           {2, +1, 0b0001}, {2, +1, 0b0111}, {3, -1, 0b0000}, {3, -1, 0b0110}}}},
        // (1,-,1,+)
        {1, 1, 1, 0,
         {{{0, +1, 0b1001}, {0, +1, 0b1111}, {1, +1, 0b1000}, {1, +1, 0b1110},
           {2, -1, 0b0001}, {2, -1, 0b0111}, {3, -1, 0b0000}, {3, -1, 0b0110}}}},
        // (1,-,1,-)
        {1, 1, 1, 1,
         {{{0, +1, 0b1001}, {0, +1, 0b1111}, {1, -1, 0b1000}, {1, -1, 0b1110},
           {2, -1, 0b0001}, {2, -1, 0b0111}, {3, +1, 0b0000}, {3, +1, 0b0110}}}},
    }};
    return rows;
}

const std::array<HadamardExpansionGroup, 4>& hadamard_expansion_reference() {
    static const std::array<HadamardExpansionGroup, 4> groups = {{
        {0,
         {{{+1, K(0, 0, 0, 0)}, {+1, K(0, 0, 0, 1)}, {+1, K(0, 1, 0, 0)},
           {+1, K(0, 1, 0, 1)}, {+1, K(0, 0, 1, 0)}, {+1, K(0, 0, 1, 1)},
           {-1, K(0, 1, 1, 0)}, {-1, K(0, 1, 1, 1)}}}},
        {1,
         {{{+1, K(0, 0, 0, 0)}, {-1, K(0, 0, 0, 1)}, {+1, K(0, 1, 0, 0)},
           {-1, K(0, 1, 0, 1)}, {+1, K(0, 0, 1, 0)}, {-1, K(0, 0, 1, 1)},
           {-1, K(0, 1, 1, 0)}, {+1, K(0, 1, 1, 1)}}}},
        {2,
         {{{+1, K(1, 0, 0, 0)}, {+1, K(1, 0, 0, 1)}, {+1, K(1, 1, 0, 0)},
           {+1, K(1, 1, 0, 1)}, {+1, K(1, 0, 1, 0)}, {+1, K(1, 0, 1, 1)},
           {-1, K(1, 1, 1, 0)}, {-1, K(1, 1, 1, 1)}}}},
        {3,
         {{{+1, K(1, 0, 0, 0)}, {-1, K(1, 0, 0, 1)}, {+1, K(1, 1, 0, 0)},
           {-1, K(1, 1, 0, 1)}, {+1, K(1, 0, 1, 0)}, {-1, K(1, 0, 1, 1)},
           {-1, K(1, 1, 1, 0)}, {+1, K(1, 1, 1, 1)}}}},
    }};
    return groups;
}

const std::array<RegroupedTerm, 4>& bell_regrouping_reference() {
    // a2 factor per outcome: phi+ -> (b0, b1), phi- -> (b1, b0),
    // psi+ -> (b0, -b1), psi- -> (-b1, b0).
    static const std::array<RegroupedTerm, 4> terms = {{
        {BellOutcome::PhiPlus, 0, +1, 1, +1},
        {BellOutcome::PhiMinus, 1, +1, 0, +1},
        {BellOutcome::PsiPlus, 0, +1, 1, -1},
        {BellOutcome::PsiMinus, 1, -1, 0, +1},
    }};
    return terms;
}

const std::array<CorrectionReferenceCell, 4>& correction_reference() {
    static const std::array<CorrectionReferenceCell, 4> cells = {{
        {BellOutcome::PhiPlus, PauliOp::I, PauliOp::I},
        {BellOutcome::PhiMinus, PauliOp::X, PauliOp::I},
        {BellOutcome::PsiPlus, PauliOp::Z, PauliOp::I},
        {BellOutcome::PsiMinus, PauliOp::iY, PauliOp::I},
    }};
    return cells;
}

namespace {

const std::vector<QubitLabel>& collapse_labels() {
    static const std::vector<QubitLabel> labels = {"b1", "c1", "a2", "c2"};
    return labels;
}

std::complex<double> coefficient(int index, const protocol::InputState& in_a,
                                 const protocol::InputState& in_b) {
    const auto a = (index >> 1) ? in_a.amp1() : in_a.amp0();
    const auto b = (index & 1) ? in_b.amp1() : in_b.amp0();
    return a * b;
}

} // namespace

StateVector<double> instantiate_collapse_row(const CollapseRow& row,
                                             const protocol::InputState& in_a,
                                             const protocol::InputState& in_b) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
    for (const auto& term : row.terms)
        amps(term.ket) +=
            double(term.sign) * coefficient(term.coeff, in_a, in_b);
    return StateVector<double>::from_unnormalized(collapse_labels(), amps);
}

StateVector<double>
instantiate_hadamard_expansion(const protocol::InputState& in_a,
                               const protocol::InputState& in_b) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
    for (const auto& group : hadamard_expansion_reference()) {
        const auto c = coefficient(group.coeff, in_a, in_b);
        for (const auto& [sign, ket] : group.kets)
            amps(ket) += double(sign) * c;
    }
    return StateVector<double>::from_unnormalized(collapse_labels(), amps);
}

StateVector<double> instantiate_regrouped_term(const RegroupedTerm& term,
                                               const protocol::InputState& in_a,
                                               const protocol::InputState& in_b) {
    const auto b_amp = [&](int index) {
        return index ? in_b.amp1() : in_b.amp0();
    };
    Eigen::VectorXcd b1_amps(2), a2_amps(2);
    b1_amps << in_a.amp0(), in_a.amp1();
    a2_amps << double(term.a2_sign0) * b_amp(term.a2_index0),
        double(term.a2_sign1) * b_amp(term.a2_index1);
    return tensor(
        StateVector<double>::from_unnormalized({"b1"}, b1_amps),
        StateVector<double>::from_unnormalized({"a2"}, a2_amps));
}

} // namespace bcqt::verify
