// checks.hpp
// Executable adjudication of the reference data against the simulator. Every
// checked cell yields exactly one report; mismatches are findings, not
// failures.

#pragma once

#include <string>
#include <vector>

#include "bcqt/protocol/input_state.hpp"

namespace bcqt::verify {

enum class Verdict { Match, Mismatch };

inline const char* to_string(Verdict v) {
    return v == Verdict::Match ? "match" : "mismatch";
}

struct DiscrepancyReport {
    std::string location;
    std::string reference_value;
    std::string oracle_value;
    Verdict verdict;

    friend bool operator==(const DiscrepancyReport&,
                           const DiscrepancyReport&) = default;
};

// Instantiates each of the 16 collapse rows with the given payloads and
// compares against the forced branch state, up to normalization and global
// phase. 16 reports.
std::vector<DiscrepancyReport> check_collapse_table(
    const protocol::InputState& in_a, const protocol::InputState& in_b);

// On the (0,+,0,+) branch of the probe input: the controller's Hadamards
// must reproduce the reference expansion, and each Bell projection must give
// the regrouped product term with probability 1/4. 5 reports.
std::vector<DiscrepancyReport> check_branch_regrouping();

// Compares the reference recovery assignment (4 outcomes x 2 parties on the
// (0,+,0,+) branch) against the brute-forced table. 8 reports.
std::vector<DiscrepancyReport> check_correction_reference();

// Four-outcome swap test on two fresh EPR pairs: a Bell measurement of the
// two inner qubits must leave the outer pair in the matching Bell state with
// probability 1/4 each. 4 reports.
std::vector<DiscrepancyReport> check_swapping_reports();

// True iff all four swap outcomes pass.
bool check_swapping();

} // namespace bcqt::verify
