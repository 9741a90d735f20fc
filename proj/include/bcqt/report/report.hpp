// report.hpp
// Machine-readable run reports: stable JSON schema plus a fixed-column CSV
// rendering. Field names are snake_case; records are sorted by branch index,
// then trial index, so identical configurations serialize identically.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcqt/protocol/outcome.hpp"
#include "bcqt/verify/checks.hpp"

namespace bcqt::report {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class Mode { Run, Enumerate, Verify, ControlPower };
enum class OutputFormat { Json, Csv };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);
std::string to_string(OutputFormat format);
OutputFormat format_from_string(const std::string& name);

struct RunConfig {
    Mode mode = Mode::Run;
    std::optional<std::array<double, 4>> alice; // re0, im0, re1, im1
    std::optional<std::array<double, 4>> bob;
    int haar = 0;   // number of Haar-random input pairs; 0 = use amplitudes
    int trials = 1; // sampled runs per input (run mode)
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Json;
    std::string output_path; // empty = stdout
    bool deterministic = false;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct BranchRecord {
    int trial = 0;
    int branch_index = 0;
    protocol::OutcomeRecord branch; // charlie_bell always present here
    double probability = 0.0;
    PauliOp correction_b1 = PauliOp::I;
    PauliOp correction_a2 = PauliOp::I;
    double fidelity_b1 = 0.0;
    double fidelity_a2 = 0.0;

    friend bool operator==(const BranchRecord&, const BranchRecord&) = default;
};

struct ControlRecord {
    int input_index = 0;
    double controlled_fidelity = 0.0;
    double uncontrolled_fidelity = 0.0;
    double trace_distance_to_mixed = 0.0;

    friend bool operator==(const ControlRecord&, const ControlRecord&) = default;
};

struct Summary {
    std::optional<double> min_fidelity;
    std::optional<double> mean_fidelity;
    int discrepancy_count = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
    RunConfig config;
    std::string version = kArtifactVersion;
    std::optional<std::string> timestamp; // absent under --deterministic
    std::vector<BranchRecord> records;
    std::vector<verify::DiscrepancyReport> discrepancies;
    std::vector<ControlRecord> control;
    std::optional<std::string> charlie_dependent_qubit;
    std::optional<std::string> charlie_dependent_party;
    Summary summary;

    friend bool operator==(const Report&, const Report&) = default;
};

// Sorts records, then fills summary.min/mean fidelity (over branch records;
// absent when there are none) and the discrepancy count.
void finalize(Report& report);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

std::string serialize(const Report& report); // per report.config.format
std::string to_csv(const Report& report);

} // namespace bcqt::report
