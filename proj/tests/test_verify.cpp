#include "doctest.h"

#include <array>
#include <string>
#include <vector>

#include "bcqt/protocol/corrections.hpp"
#include "bcqt/verify/checks.hpp"
#include "bcqt/verify/reference_data.hpp"

#include "support.hpp"

using namespace bcqt;
using namespace bcqt::verify;
using protocol::haar_random_input;
using protocol::probe_input_alice;
using protocol::probe_input_bob;

namespace {

std::vector<Verdict> verdicts(const std::vector<DiscrepancyReport>& reports) {
    std::vector<Verdict> out;
    out.reserve(reports.size());
    for (const auto& r : reports) out.push_back(r.verdict);
    return out;
}

} // namespace

TEST_CASE("collapse table adjudication: rows 9-12 are inconsistent") {
    const auto reports =
        check_collapse_table(probe_input_alice(), probe_input_bob());
    REQUIRE(reports.size() == 16);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const bool swapped_row = i >= 8 && i <= 11;
        CHECK(reports[i].verdict ==
              (swapped_row ? Verdict::Mismatch : Verdict::Match));
        CHECK_FALSE(reports[i].oracle_value.empty());
        CHECK_FALSE(reports[i].reference_value.empty());
    }
    CHECK(reports[0].location == "collapse_table/row01");
    CHECK(reports[15].location == "collapse_table/row16");
}

TEST_CASE("collapse table verdicts are input-independent") {
    const auto baseline =
        verdicts(check_collapse_table(probe_input_alice(), probe_input_bob()));
    Xoshiro256StarStar rng(1618);
    for (int round = 0; round < 5; ++round) {
        const auto in_a = haar_random_input(rng);
        const auto in_b = haar_random_input(rng);
        CHECK(verdicts(check_collapse_table(in_a, in_b)) == baseline);
    }
}

TEST_CASE("branch regrouping checks pass") {
    const auto reports = check_branch_regrouping();
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].location == "hadamard_expansion");
    for (const auto& report : reports)
        CHECK(report.verdict == Verdict::Match);
}

TEST_CASE("correction reference adjudication: operations are swapped") {
    const auto reports = check_correction_reference();
    REQUIRE(reports.size() == 8);

    int matches = 0;
    for (const auto& report : reports)
        if (report.verdict == Verdict::Match) ++matches;
    CHECK(matches == 2);

    // phi+ agrees for both parties; every other cell is swapped
    CHECK(reports[0].location == "correction_reference/phi_plus/bob");
    CHECK(reports[0].verdict == Verdict::Match);
    CHECK(reports[1].location == "correction_reference/phi_plus/alice");
    CHECK(reports[1].verdict == Verdict::Match);

    // the reference prints psi-'s iY against bob; the oracle puts it on alice
    CHECK(reports[6].location == "correction_reference/psi_minus/bob");
    CHECK(reports[6].reference_value == "iY");
    CHECK(reports[6].oracle_value == "I");
    CHECK(reports[6].verdict == Verdict::Mismatch);
    CHECK(reports[7].location == "correction_reference/psi_minus/alice");
    CHECK(reports[7].reference_value == "I");
    CHECK(reports[7].oracle_value == "iY");
    CHECK(reports[7].verdict == Verdict::Mismatch);
}

TEST_CASE("entanglement swapping check passes all four outcomes") {
    CHECK(check_swapping());
    const auto reports = check_swapping_reports();
    REQUIRE(reports.size() == 4);
    for (const auto& report : reports)
        CHECK(report.verdict == Verdict::Match);
}

TEST_CASE("checks are reproducible bit for bit") {
    CHECK(check_collapse_table(probe_input_alice(), probe_input_bob()) ==
          check_collapse_table(probe_input_alice(), probe_input_bob()));
    CHECK(check_branch_regrouping() == check_branch_regrouping());
    CHECK(check_correction_reference() == check_correction_reference());
    CHECK(check_swapping_reports() == check_swapping_reports());
}

TEST_CASE("hadamard expansion reference is row 1 under H on c1 and c2") {
    const auto row1 = instantiate_collapse_row(
        collapse_reference()[0], probe_input_alice(), probe_input_bob());
    const auto transformed =
        apply_gate(apply_gate(row1, Gate::h("c1")), Gate::h("c2"));
    const auto expansion =
        instantiate_hadamard_expansion(probe_input_alice(), probe_input_bob());
    CHECK(states_equal_up_to_phase(expansion, transformed, 1e-10));
}

TEST_CASE("reference rows instantiate to normalized states") {
    const auto& rows = collapse_reference();
    for (const auto& row : rows) {
        const auto state =
            instantiate_collapse_row(row, probe_input_alice(),
                                     probe_input_bob());
        CHECK(testsupport::near(state.amplitudes().norm(), 1.0, 1e-12));
        CHECK(state.labels() ==
              std::vector<QubitLabel>{"b1", "c1", "a2", "c2"});
    }

    // with basis payloads, row 1 collapses onto (|0000> + |0110>)/sqrt(2)
    const auto basis_row = instantiate_collapse_row(
        rows[0], protocol::InputState(1.0, 0.0), protocol::InputState(1.0, 0.0));
    CHECK(testsupport::near(std::abs(basis_row.amplitude(0b0000)),
                            1.0 / std::sqrt(2.0), 1e-12));
    CHECK(testsupport::near(std::abs(basis_row.amplitude(0b0110)),
                            1.0 / std::sqrt(2.0), 1e-12));
}
