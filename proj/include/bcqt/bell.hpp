// bell.hpp
// The four Bell states / Bell measurement outcomes.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "bcqt/errors.hpp"

namespace bcqt {

// phi_plus  = (|00> + |11>)/sqrt(2)    psi_plus  = (|01> + |10>)/sqrt(2)
// phi_minus = (|00> - |11>)/sqrt(2)    psi_minus = (|01> - |10>)/sqrt(2)
enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kAllBellOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus,
    BellOutcome::PsiMinus};

inline int bell_index(BellOutcome o) { return static_cast<int>(o); }

inline std::string_view to_string(BellOutcome o) {
    switch (o) {
    case BellOutcome::PhiPlus: return "phi_plus";
    case BellOutcome::PhiMinus: return "phi_minus";
    case BellOutcome::PsiPlus: return "psi_plus";
    case BellOutcome::PsiMinus: return "psi_minus";
    }
    return "?";
}

inline BellOutcome bell_from_string(std::string_view name) {
    if (name == "phi_plus") return BellOutcome::PhiPlus;
    if (name == "phi_minus") return BellOutcome::PhiMinus;
    if (name == "psi_plus") return BellOutcome::PsiPlus;
    if (name == "psi_minus") return BellOutcome::PsiMinus;
    throw ConfigError("unknown Bell outcome: " + std::string(name));
}

// Z-measurement bits produced by the CNOT(q1->q2) + H(q1) basis change.
// Bit pairs (q1, q2) map as 00, 01, 10, 11 -> phi+, psi+, phi-, psi-.
inline std::pair<int, int> bell_bits(BellOutcome o) {
    switch (o) {
    case BellOutcome::PhiPlus: return {0, 0};
    case BellOutcome::PsiPlus: return {0, 1};
    case BellOutcome::PhiMinus: return {1, 0};
    case BellOutcome::PsiMinus: return {1, 1};
    }
    throw SimulationError("unreachable");
}

inline BellOutcome bell_from_bits(int bit1, int bit2) {
    if (bit1 == 0) return bit2 == 0 ? BellOutcome::PhiPlus : BellOutcome::PsiPlus;
    return bit2 == 0 ? BellOutcome::PhiMinus : BellOutcome::PsiMinus;
}

} // namespace bcqt
