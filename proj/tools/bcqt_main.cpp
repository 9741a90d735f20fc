// bcqt_main.cpp
// Command-line entry point. Subcommands: run, enumerate, verify,
// control-power. Exit codes: 0 success, 1 property violation, 2 usage error.

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bcqt/report/commands.hpp"

namespace {

using bcqt::report::Mode;
using bcqt::report::RunConfig;

struct RawOptions {
    std::vector<double> alice;
    std::vector<double> bob;
    std::string format = "json";
};

void add_common_options(CLI::App& sub, RunConfig& config, RawOptions& raw) {
    sub.add_option("--seed", config.seed, "RNG seed (xoshiro256**)")
        ->default_val(0);
    sub.add_option("--format", raw.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub.add_option("-o,--output", config.output_path,
                   "Write the report to this path (default: stdout)");
    sub.add_flag("--deterministic", config.deterministic,
                 "Suppress the timestamp so identical configs produce "
                 "byte-identical reports");
}

void add_input_options(CLI::App& sub, RunConfig& config, RawOptions& raw) {
    sub.add_option("--alice", raw.alice,
                   "Alice's payload amplitudes re0,im0,re1,im1")
        ->delimiter(',')
        ->expected(0, 4);
    sub.add_option("--bob", raw.bob,
                   "Bob's payload amplitudes re0,im0,re1,im1")
        ->delimiter(',')
        ->expected(0, 4);
    sub.add_option("--haar", config.haar,
                   "Use this many Haar-random input pairs instead of explicit "
                   "amplitudes");
}

int apply_raw(RunConfig& config, const RawOptions& raw) {
    config.format = bcqt::report::format_from_string(raw.format);
    if (!raw.alice.empty()) {
        if (raw.alice.size() != 4) {
            std::fprintf(stderr, "error: --alice needs re0,im0,re1,im1\n");
            return 2;
        }
        config.alice = std::array<double, 4>{raw.alice[0], raw.alice[1],
                                             raw.alice[2], raw.alice[3]};
    }
    if (!raw.bob.empty()) {
        if (raw.bob.size() != 4) {
            std::fprintf(stderr, "error: --bob needs re0,im0,re1,im1\n");
            return 2;
        }
        config.bob = std::array<double, 4>{raw.bob[0], raw.bob[1], raw.bob[2],
                                           raw.bob[3]};
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator and verification suite for bidirectional "
                 "controlled teleportation over three EPR pairs"};
    app.require_subcommand(1);

    RunConfig run_cfg, enum_cfg, verify_cfg, control_cfg;
    RawOptions run_raw, enum_raw, verify_raw, control_raw;

    auto* run = app.add_subcommand(
        "run", "Sampled protocol runs; reports per-run fidelities");
    run_cfg.mode = Mode::Run;
    add_common_options(*run, run_cfg, run_raw);
    add_input_options(*run, run_cfg, run_raw);
    run->add_option("--trials", run_cfg.trials,
                    "Sampled runs per input pair")
        ->default_val(1);

    auto* enumerate = app.add_subcommand(
        "enumerate", "Force every one of the 64 measurement branches");
    enum_cfg.mode = Mode::Enumerate;
    add_common_options(*enumerate, enum_cfg, enum_raw);
    add_input_options(*enumerate, enum_cfg, enum_raw);

    auto* verify = app.add_subcommand(
        "verify", "Adjudicate the embedded reference data against the "
                  "simulator");
    verify_cfg.mode = Mode::Verify;
    add_common_options(*verify, verify_cfg, verify_raw);
    verify->add_option("--alice", verify_raw.alice,
                       "Payload amplitudes used to instantiate the collapse "
                       "table")
        ->delimiter(',')
        ->expected(0, 4);
    verify->add_option("--bob", verify_raw.bob,
                       "Payload amplitudes used to instantiate the collapse "
                       "table")
        ->delimiter(',')
        ->expected(0, 4);

    auto* control = app.add_subcommand(
        "control-power", "No-cooperation fidelities for both receivers");
    control_cfg.mode = Mode::ControlPower;
    add_common_options(*control, control_cfg, control_raw);
    add_input_options(*control, control_cfg, control_raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; usage errors exit 2
    }

    if (run->parsed()) {
        if (int code = apply_raw(run_cfg, run_raw)) return code;
        return bcqt::report::cmd_run(run_cfg);
    }
    if (enumerate->parsed()) {
        if (int code = apply_raw(enum_cfg, enum_raw)) return code;
        return bcqt::report::cmd_enumerate(enum_cfg);
    }
    if (verify->parsed()) {
        if (int code = apply_raw(verify_cfg, verify_raw)) return code;
        return bcqt::report::cmd_verify(verify_cfg);
    }
    if (control->parsed()) {
        if (int code = apply_raw(control_cfg, control_raw)) return code;
        return bcqt::report::cmd_control_power(control_cfg);
    }
    return 2;
}
