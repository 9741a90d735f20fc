// commands.hpp
// Subcommand drivers behind the CLI. Each builds a report, emits it in the
// configured format, and returns the process exit code: 0 on success, 1 when
// a verified property is violated, 2 on a bad configuration.

#pragma once

#include "bcqt/report/report.hpp"

namespace bcqt::report {

// Pure builders (no I/O); throw ConfigError / NotNormalized on bad input.
Report build_run_report(const RunConfig& config);
Report build_enumerate_report(const RunConfig& config);
Report build_verify_report(const RunConfig& config);
Report build_control_power_report(const RunConfig& config);

// Writes the serialized report to config.output_path or stdout.
void emit(const Report& report);

int cmd_run(const RunConfig& config);
int cmd_enumerate(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_control_power(const RunConfig& config);

} // namespace bcqt::report
