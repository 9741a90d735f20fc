#include "bcqt/verify/checks.hpp"

#include <cmath>
#include <cstdio>

#include "bcqt/protocol/corrections.hpp"
#include "bcqt/protocol/steps.hpp"
#include "bcqt/verify/reference_data.hpp"

namespace bcqt::verify {

namespace {

constexpr double kStateMatchTol = 1e-10;
constexpr double kProbabilityTol = 1e-12;

using protocol::InputState;
namespace reg = protocol::reg;

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    return buf;
}

StateVector<double> forced_collapse_state(const InputState& in_a,
                                          const InputState& in_b,
                                          const CollapseRow& row) {
    const auto system = protocol::step2_cnots(
        protocol::compose_system(protocol::build_channel(), in_a, in_b));
    protocol::OutcomeRecord forced;
    forced.alice_z = row.alice_z;
    forced.alice_x = row.alice_x;
    forced.bob_z = row.bob_z;
    forced.bob_x = row.bob_x;
    return protocol::step3_measure(system, forced).state;
}

} // namespace

std::vector<DiscrepancyReport> check_collapse_table(const InputState& in_a,
                                                    const InputState& in_b) {
    std::vector<DiscrepancyReport> reports;
    reports.reserve(16);
    const auto& rows = collapse_reference();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto reference = instantiate_collapse_row(rows[i], in_a, in_b);
        const auto oracle = forced_collapse_state(in_a, in_b, rows[i]);
        const bool match =
            states_equal_up_to_phase(reference, oracle, kStateMatchTol);
        char location[32];
        std::snprintf(location, sizeof(location), "collapse_table/row%02zu",
                      i + 1);
        reports.push_back({location, format_state(reference),
                           format_state(oracle),
                           match ? Verdict::Match : Verdict::Mismatch});
    }
    return reports;
}

std::vector<DiscrepancyReport> check_branch_regrouping() {
    const InputState in_a = protocol::probe_input_alice();
    const InputState in_b = protocol::probe_input_bob();

    const auto system = protocol::step2_cnots(
        protocol::compose_system(protocol::build_channel(), in_a, in_b));
    const auto branch =
        protocol::step3_measure(system, protocol::OutcomeRecord{}).state;

    std::vector<DiscrepancyReport> reports;
    reports.reserve(5);

    // Hadamards on the controller's qubits vs. the reference expansion.
    const auto after_h =
        apply_gate(apply_gate(branch, Gate::h(reg::c1)), Gate::h(reg::c2));
    const auto expansion = instantiate_hadamard_expansion(in_a, in_b);
    reports.push_back(
        {"hadamard_expansion", format_state(expansion), format_state(after_h),
         states_equal_up_to_phase(expansion, after_h, kStateMatchTol)
             ? Verdict::Match
             : Verdict::Mismatch});

    // Bell projections of (c1, c2) vs. the regrouped product terms.
    for (const auto& term : bell_regrouping_reference()) {
        const auto s4 = protocol::step4_charlie(branch, true, term.outcome);
        const auto reference = instantiate_regrouped_term(term, in_a, in_b);
        const bool state_ok =
            states_equal_up_to_phase(reference, s4.state, kStateMatchTol);
        const bool prob_ok = std::abs(s4.probability - 0.25) <= kProbabilityTol;
        reports.push_back(
            {"bell_regrouping/" + std::string(to_string(term.outcome)),
             format_state(reference) + "; p=0.25",
             format_state(s4.state) + "; p=" + format_probability(s4.probability),
             state_ok && prob_ok ? Verdict::Match : Verdict::Mismatch});
    }
    return reports;
}

std::vector<DiscrepancyReport> check_correction_reference() {
    const auto& table = protocol::standard_correction_table();
    const int reference_branch = protocol::user_branch_index(0, 0, 0, 0);

    std::vector<DiscrepancyReport> reports;
    reports.reserve(8);
    for (const auto& cell : correction_reference()) {
        const auto& oracle = table.at(reference_branch, cell.outcome);
        const std::string outcome_name{to_string(cell.outcome)};
        reports.push_back(
            {"correction_reference/" + outcome_name + "/bob",
             std::string(to_string(cell.bob_on_b1)),
             std::string(to_string(oracle.on_b1)),
             cell.bob_on_b1 == oracle.on_b1 ? Verdict::Match
                                            : Verdict::Mismatch});
        reports.push_back(
            {"correction_reference/" + outcome_name + "/alice",
             std::string(to_string(cell.alice_on_a2)),
             std::string(to_string(oracle.on_a2)),
             cell.alice_on_a2 == oracle.on_a2 ? Verdict::Match
                                              : Verdict::Mismatch});
    }
    return reports;
}

std::vector<DiscrepancyReport> check_swapping_reports() {
    const QubitLabel q1("q1"), q2("q2"), q3("q3"), q4("q4");
    const auto pairs = tensor(bell_state<double>(BellOutcome::PhiPlus, q1, q2),
                              bell_state<double>(BellOutcome::PhiPlus, q3, q4));

    std::vector<DiscrepancyReport> reports;
    reports.reserve(4);
    for (BellOutcome outcome : kAllBellOutcomes) {
        const auto measured = postselect_bell(pairs, q2, q3, outcome);
        const auto expected = bell_state<double>(outcome, q1, q4);
        const bool state_ok =
            states_equal_up_to_phase(expected, measured.state, kStateMatchTol);
        const bool prob_ok =
            std::abs(measured.probability - 0.25) <= kProbabilityTol;
        reports.push_back(
            {"swapping/" + std::string(to_string(outcome)),
             format_state(expected) + "; p=0.25",
             format_state(measured.state) +
                 "; p=" + format_probability(measured.probability),
             state_ok && prob_ok ? Verdict::Match : Verdict::Mismatch});
    }
    return reports;
}

bool check_swapping() {
    for (const auto& report : check_swapping_reports())
        if (report.verdict != Verdict::Match) return false;
    return true;
}

} // namespace bcqt::verify
