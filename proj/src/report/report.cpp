#include "bcqt/report/report.hpp"

#include <algorithm>
#include <cstdio>

#include "bcqt/errors.hpp"

namespace bcqt::report {

std::string to_string(Mode mode) {
    switch (mode) {
    case Mode::Run: return "run";
    case Mode::Enumerate: return "enumerate";
    case Mode::Verify: return "verify";
    case Mode::ControlPower: return "control-power";
    }
    return "?";
}

Mode mode_from_string(const std::string& name) {
    if (name == "run") return Mode::Run;
    if (name == "enumerate") return Mode::Enumerate;
    if (name == "verify") return Mode::Verify;
    if (name == "control-power") return Mode::ControlPower;
    throw ConfigError("unknown mode: " + name);
}

std::string to_string(OutputFormat format) {
    return format == OutputFormat::Json ? "json" : "csv";
}

OutputFormat format_from_string(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw ConfigError("unknown format: " + name);
}

void finalize(Report& report) {
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const BranchRecord& a, const BranchRecord& b) {
                         if (a.branch_index != b.branch_index)
                             return a.branch_index < b.branch_index;
                         return a.trial < b.trial;
                     });
    if (report.records.empty()) {
        report.summary.min_fidelity.reset();
        report.summary.mean_fidelity.reset();
    } else {
        double min_f = 1.0, sum_f = 0.0;
        for (const auto& r : report.records) {
            min_f = std::min({min_f, r.fidelity_b1, r.fidelity_a2});
            sum_f += 0.5 * (r.fidelity_b1 + r.fidelity_a2);
        }
        report.summary.min_fidelity = min_f;
        report.summary.mean_fidelity =
            sum_f / static_cast<double>(report.records.size());
    }
    int mismatches = 0;
    for (const auto& d : report.discrepancies)
        if (d.verdict == verify::Verdict::Mismatch) ++mismatches;
    report.summary.discrepancy_count = mismatches;
}

// --- JSON ---------------------------------------------------------------

namespace {

using nlohmann::json;

json config_to_json(const RunConfig& c) {
    json j;
    j["mode"] = to_string(c.mode);
    j["alice"] = c.alice ? json(*c.alice) : json(nullptr);
    j["bob"] = c.bob ? json(*c.bob) : json(nullptr);
    j["haar"] = c.haar;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["format"] = to_string(c.format);
    j["output"] = c.output_path;
    j["deterministic"] = c.deterministic;
    return j;
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.mode = mode_from_string(j.at("mode").get<std::string>());
    if (!j.at("alice").is_null())
        c.alice = j.at("alice").get<std::array<double, 4>>();
    if (!j.at("bob").is_null())
        c.bob = j.at("bob").get<std::array<double, 4>>();
    c.haar = j.at("haar").get<int>();
    c.trials = j.at("trials").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.format = format_from_string(j.at("format").get<std::string>());
    c.output_path = j.at("output").get<std::string>();
    c.deterministic = j.at("deterministic").get<bool>();
    return c;
}

json branch_to_json(const protocol::OutcomeRecord& rec) {
    json j;
    j["alice_z"] = rec.alice_z;
    j["alice_x"] = rec.alice_x;
    j["bob_z"] = rec.bob_z;
    j["bob_x"] = rec.bob_x;
    j["charlie_bell"] = rec.charlie_bell
                            ? json(std::string(to_string(*rec.charlie_bell)))
                            : json(nullptr);
    return j;
}

protocol::OutcomeRecord branch_from_json(const json& j) {
    protocol::OutcomeRecord rec;
    rec.alice_z = j.at("alice_z").get<int>();
    rec.alice_x = j.at("alice_x").get<int>();
    rec.bob_z = j.at("bob_z").get<int>();
    rec.bob_x = j.at("bob_x").get<int>();
    if (!j.at("charlie_bell").is_null())
        rec.charlie_bell =
            bell_from_string(j.at("charlie_bell").get<std::string>());
    return rec;
}

} // namespace

nlohmann::json to_json(const Report& report) {
    json j;
    j["config"] = config_to_json(report.config);
    j["version"] = report.version;
    if (report.timestamp) j["timestamp"] = *report.timestamp;

    json records = json::array();
    for (const auto& r : report.records) {
        json rj;
        rj["trial"] = r.trial;
        rj["branch_index"] = r.branch_index;
        rj["branch"] = branch_to_json(r.branch);
        rj["probability"] = r.probability;
        rj["correction_b1"] = std::string(to_string(r.correction_b1));
        rj["correction_a2"] = std::string(to_string(r.correction_a2));
        rj["fidelity_b1"] = r.fidelity_b1;
        rj["fidelity_a2"] = r.fidelity_a2;
        records.push_back(std::move(rj));
    }
    j["records"] = std::move(records);

    json discrepancies = json::array();
    for (const auto& d : report.discrepancies) {
        json dj;
        dj["location"] = d.location;
        dj["reference_value"] = d.reference_value;
        dj["oracle_value"] = d.oracle_value;
        dj["verdict"] = std::string(verify::to_string(d.verdict));
        discrepancies.push_back(std::move(dj));
    }
    j["discrepancies"] = std::move(discrepancies);

    json control = json::array();
    for (const auto& c : report.control) {
        json cj;
        cj["input_index"] = c.input_index;
        cj["controlled_fidelity"] = c.controlled_fidelity;
        cj["uncontrolled_fidelity"] = c.uncontrolled_fidelity;
        cj["trace_distance_to_mixed"] = c.trace_distance_to_mixed;
        control.push_back(std::move(cj));
    }
    j["control"] = std::move(control);

    if (report.charlie_dependent_qubit)
        j["charlie_dependent_qubit"] = *report.charlie_dependent_qubit;
    if (report.charlie_dependent_party)
        j["charlie_dependent_party"] = *report.charlie_dependent_party;

    json summary;
    summary["min_fidelity"] = report.summary.min_fidelity
                                  ? json(*report.summary.min_fidelity)
                                  : json(nullptr);
    summary["mean_fidelity"] = report.summary.mean_fidelity
                                   ? json(*report.summary.mean_fidelity)
                                   : json(nullptr);
    summary["discrepancy_count"] = report.summary.discrepancy_count;
    j["summary"] = std::move(summary);
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report report;
    report.config = config_from_json(j.at("config"));
    report.version = j.at("version").get<std::string>();
    if (j.contains("timestamp"))
        report.timestamp = j.at("timestamp").get<std::string>();

    for (const auto& rj : j.at("records")) {
        BranchRecord r;
        r.trial = rj.at("trial").get<int>();
        r.branch_index = rj.at("branch_index").get<int>();
        r.branch = branch_from_json(rj.at("branch"));
        r.probability = rj.at("probability").get<double>();
        r.correction_b1 =
            pauli_from_string(rj.at("correction_b1").get<std::string>());
        r.correction_a2 =
            pauli_from_string(rj.at("correction_a2").get<std::string>());
        r.fidelity_b1 = rj.at("fidelity_b1").get<double>();
        r.fidelity_a2 = rj.at("fidelity_a2").get<double>();
        report.records.push_back(std::move(r));
    }

    for (const auto& dj : j.at("discrepancies")) {
        verify::DiscrepancyReport d;
        d.location = dj.at("location").get<std::string>();
        d.reference_value = dj.at("reference_value").get<std::string>();
        d.oracle_value = dj.at("oracle_value").get<std::string>();
        d.verdict = dj.at("verdict").get<std::string>() == "match"
                        ? verify::Verdict::Match
                        : verify::Verdict::Mismatch;
        report.discrepancies.push_back(std::move(d));
    }

    for (const auto& cj : j.at("control")) {
        ControlRecord c;
        c.input_index = cj.at("input_index").get<int>();
        c.controlled_fidelity = cj.at("controlled_fidelity").get<double>();
        c.uncontrolled_fidelity = cj.at("uncontrolled_fidelity").get<double>();
        c.trace_distance_to_mixed =
            cj.at("trace_distance_to_mixed").get<double>();
        report.control.push_back(c);
    }

    if (j.contains("charlie_dependent_qubit"))
        report.charlie_dependent_qubit =
            j.at("charlie_dependent_qubit").get<std::string>();
    if (j.contains("charlie_dependent_party"))
        report.charlie_dependent_party =
            j.at("charlie_dependent_party").get<std::string>();

    const auto& summary = j.at("summary");
    if (!summary.at("min_fidelity").is_null())
        report.summary.min_fidelity = summary.at("min_fidelity").get<double>();
    if (!summary.at("mean_fidelity").is_null())
        report.summary.mean_fidelity =
            summary.at("mean_fidelity").get<double>();
    report.summary.discrepancy_count =
        summary.at("discrepancy_count").get<int>();
    return report;
}

// --- CSV ----------------------------------------------------------------

namespace {

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Discrepancy values may contain commas; quote per RFC 4180.
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_csv(const Report& report) {
    std::string out;
    out += "# version=" + report.version + "\n";
    out += "# config mode=" + to_string(report.config.mode) +
           " seed=" + std::to_string(report.config.seed) +
           " haar=" + std::to_string(report.config.haar) +
           " trials=" + std::to_string(report.config.trials) +
           " deterministic=" +
           (report.config.deterministic ? std::string("1") : std::string("0")) +
           "\n";
    if (report.timestamp) out += "# timestamp=" + *report.timestamp + "\n";
    out += "# summary min_fidelity=" +
           (report.summary.min_fidelity ? csv_double(*report.summary.min_fidelity)
                                        : std::string("n/a")) +
           " mean_fidelity=" +
           (report.summary.mean_fidelity
                ? csv_double(*report.summary.mean_fidelity)
                : std::string("n/a")) +
           " discrepancy_count=" +
           std::to_string(report.summary.discrepancy_count) + "\n";
    if (report.charlie_dependent_qubit)
        out += "# charlie_dependent_qubit=" + *report.charlie_dependent_qubit +
               " charlie_dependent_party=" +
               (report.charlie_dependent_party ? *report.charlie_dependent_party
                                               : std::string("?")) +
               "\n";

    if (!report.records.empty()) {
        out += "trial,branch_index,alice_z,alice_x,bob_z,bob_x,charlie_bell,"
               "probability,correction_b1,correction_a2,fidelity_b1,"
               "fidelity_a2\n";
        for (const auto& r : report.records) {
            out += std::to_string(r.trial) + "," +
                   std::to_string(r.branch_index) + "," +
                   std::to_string(r.branch.alice_z) + "," +
                   std::to_string(r.branch.alice_x) + "," +
                   std::to_string(r.branch.bob_z) + "," +
                   std::to_string(r.branch.bob_x) + "," +
                   (r.branch.charlie_bell
                        ? std::string(to_string(*r.branch.charlie_bell))
                        : std::string("none")) +
                   "," +
                   csv_double(r.probability) + "," +
                   std::string(to_string(r.correction_b1)) + "," +
                   std::string(to_string(r.correction_a2)) + "," +
                   csv_double(r.fidelity_b1) + "," + csv_double(r.fidelity_a2) +
                   "\n";
        }
    }
    if (!report.discrepancies.empty()) {
        out += "location,reference_value,oracle_value,verdict\n";
        for (const auto& d : report.discrepancies)
            out += csv_quote(d.location) + "," + csv_quote(d.reference_value) +
                   "," + csv_quote(d.oracle_value) + "," +
                   verify::to_string(d.verdict) + "\n";
    }
    if (!report.control.empty()) {
        out += "input_index,controlled_fidelity,uncontrolled_fidelity,"
               "trace_distance_to_mixed\n";
        for (const auto& c : report.control)
            out += std::to_string(c.input_index) + "," +
                   csv_double(c.controlled_fidelity) + "," +
                   csv_double(c.uncontrolled_fidelity) + "," +
                   csv_double(c.trace_distance_to_mixed) + "\n";
    }
    return out;
}

std::string serialize(const Report& report) {
    if (report.config.format == OutputFormat::Csv) return to_csv(report);
    return to_json(report).dump(2) + "\n";
}

} // namespace bcqt::report
