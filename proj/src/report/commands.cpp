#include "bcqt/report/commands.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string_view>
#include <utility>
#include <vector>

#include "bcqt/protocol/control_power.hpp"
#include "bcqt/protocol/run.hpp"

namespace bcqt::report {

namespace {

using protocol::InputState;

constexpr double kFidelityExitTol = 1e-10;   // min fidelity >= 1 - tol
constexpr double kControlledExitTol = 1e-9;  // |controlled - 0.5| <= tol

InputState input_from_array(const std::array<double, 4>& a) {
    return InputState({a[0], a[1]}, {a[2], a[3]});
}

std::vector<std::pair<InputState, InputState>>
resolve_inputs(const RunConfig& config, Xoshiro256StarStar& rng) {
    if (config.haar < 0) throw ConfigError("--haar must be non-negative");
    if (config.haar > 0 && (config.alice || config.bob))
        throw ConfigError("--haar conflicts with explicit amplitudes");
    if (config.alice.has_value() != config.bob.has_value())
        throw ConfigError("provide both --alice and --bob, or neither");

    std::vector<std::pair<InputState, InputState>> pairs;
    if (config.haar > 0) {
        pairs.reserve(config.haar);
        for (int i = 0; i < config.haar; ++i) {
            auto a = protocol::haar_random_input(rng);
            auto b = protocol::haar_random_input(rng);
            pairs.emplace_back(std::move(a), std::move(b));
        }
    } else if (config.alice) {
        pairs.emplace_back(input_from_array(*config.alice),
                           input_from_array(*config.bob));
    } else {
        pairs.emplace_back(protocol::probe_input_alice(),
                           protocol::probe_input_bob());
    }
    return pairs;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Report new_report(const RunConfig& config) {
    Report report;
    report.config = config;
    if (!config.deterministic) report.timestamp = utc_timestamp();
    return report;
}

BranchRecord record_from_result(int trial,
                                const protocol::ProtocolResult& result) {
    BranchRecord record;
    record.trial = trial;
    record.branch_index = protocol::branch_index(result.outcome);
    record.branch = result.outcome;
    record.probability = result.branch_probability;
    record.correction_b1 = result.correction.on_b1;
    record.correction_a2 = result.correction.on_a2;
    record.fidelity_b1 = result.fidelity_b1_vs_A;
    record.fidelity_a2 = result.fidelity_a2_vs_B;
    return record;
}

void attach_controller_dependence(Report& report) {
    const auto receiver =
        protocol::standard_correction_table().charlie_dependent_receiver();
    report.charlie_dependent_qubit = protocol::receiver_qubit_name(receiver);
    report.charlie_dependent_party = protocol::receiver_party_name(receiver);
}

bool fidelities_pass(const Report& report) {
    return report.summary.min_fidelity &&
           *report.summary.min_fidelity >= 1.0 - kFidelityExitTol;
}

// Oracle-level sections must match for verify to succeed; transcription
// adjudications (collapse table, correction reference) only count.
bool is_oracle_level(std::string_view location) {
    return location.starts_with("hadamard_expansion") ||
           location.starts_with("bell_regrouping/") ||
           location.starts_with("swapping/");
}

int run_command(Report (*build)(const RunConfig&), const RunConfig& config,
                int (*exit_code)(const Report&)) {
    try {
        const Report report = build(config);
        emit(report);
        return exit_code(report);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotNormalized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SimulationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

Report build_run_report(const RunConfig& config) {
    if (config.trials < 1) throw ConfigError("--trials must be at least 1");
    Report report = new_report(config);
    Xoshiro256StarStar rng(config.seed);
    const auto inputs = resolve_inputs(config, rng);
    int trial = 0;
    for (const auto& [in_a, in_b] : inputs)
        for (int t = 0; t < config.trials; ++t)
            report.records.push_back(
                record_from_result(trial++, run_protocol(in_a, in_b, rng)));
    finalize(report);
    return report;
}

Report build_enumerate_report(const RunConfig& config) {
    if (config.trials != 1)
        throw ConfigError("enumerate does not take --trials");
    Report report = new_report(config);
    Xoshiro256StarStar rng(config.seed);
    const auto inputs = resolve_inputs(config, rng);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto& [in_a, in_b] = inputs[i];
        for (int branch = 0; branch < 64; ++branch) {
            const auto forced = protocol::outcome_from_branch_index(branch);
            report.records.push_back(record_from_result(
                static_cast<int>(i), run_protocol(in_a, in_b, forced)));
        }
    }
    finalize(report);
    return report;
}

Report build_verify_report(const RunConfig& config) {
    if (config.haar > 0)
        throw ConfigError("verify does not take --haar");
    Report report = new_report(config);
    Xoshiro256StarStar rng(config.seed);
    const auto [in_a, in_b] = resolve_inputs(config, rng).front();

    auto append = [&report](std::vector<verify::DiscrepancyReport> reports) {
        for (auto& r : reports)
            report.discrepancies.push_back(std::move(r));
    };
    append(verify::check_collapse_table(in_a, in_b));
    append(verify::check_branch_regrouping());
    append(verify::check_correction_reference());
    append(verify::check_swapping_reports());

    attach_controller_dependence(report);
    finalize(report);
    return report;
}

Report build_control_power_report(const RunConfig& config) {
    Report report = new_report(config);
    Xoshiro256StarStar rng(config.seed);
    const auto inputs = resolve_inputs(config, rng);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto result = protocol::control_power(inputs[i].first,
                                                    inputs[i].second);
        report.control.push_back({static_cast<int>(i),
                                  result.controlled_fidelity_without_charlie,
                                  result.uncontrolled_fidelity_without_charlie,
                                  result.max_trace_distance_to_mixed});
    }
    attach_controller_dependence(report);
    finalize(report);
    return report;
}

void emit(const Report& report) {
    const std::string text = serialize(report);
    if (report.config.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(report.config.output_path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file: " +
                          report.config.output_path);
    out << text;
}

int cmd_run(const RunConfig& config) {
    return run_command(build_run_report, config, [](const Report& r) {
        return fidelities_pass(r) ? 0 : 1;
    });
}

int cmd_enumerate(const RunConfig& config) {
    return run_command(build_enumerate_report, config, [](const Report& r) {
        return fidelities_pass(r) ? 0 : 1;
    });
}

int cmd_verify(const RunConfig& config) {
    return run_command(build_verify_report, config, [](const Report& r) {
        for (const auto& d : r.discrepancies)
            if (is_oracle_level(d.location) &&
                d.verdict == verify::Verdict::Mismatch)
                return 1;
        return 0;
    });
}

int cmd_control_power(const RunConfig& config) {
    return run_command(build_control_power_report, config, [](const Report& r) {
        for (const auto& c : r.control) {
            if (std::abs(c.controlled_fidelity - 0.5) > kControlledExitTol)
                return 1;
            if (c.uncontrolled_fidelity < 1.0 - kFidelityExitTol) return 1;
        }
        return 0;
    });
}

} // namespace bcqt::report
