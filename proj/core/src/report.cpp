#include "primlab/report.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "primlab/errors.hpp"
#include "primlab/version.hpp"

namespace primlab {

using nlohmann::json;

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Pass: return "pass";
        case VerdictKind::Fail: return "fail";
        case VerdictKind::Skipped: return "skipped";
        case VerdictKind::Measured: return "measured";
    }
    return "unknown";
}

VerdictSummary summarize(const std::vector<VerdictRecord>& records) {
    VerdictSummary s;
    for (const auto& r : records) {
        switch (r.kind) {
            case VerdictKind::Pass: ++s.pass; break;
            case VerdictKind::Fail: ++s.fail; break;
            case VerdictKind::Skipped: ++s.skipped; break;
            case VerdictKind::Measured: ++s.measured; break;
        }
    }
    return s;
}

namespace {

json detail_to_json(const DetailValue& value) {
    return std::visit([](const auto& v) { return json(v); }, value);
}

json summary_to_json(const VerdictSummary& s) {
    return json{{"fail", s.fail}, {"measured", s.measured}, {"pass", s.pass},
                {"skipped", s.skipped}};
}

std::string dump_canonical(const json& j) {
    // nlohmann::json over std::map keeps keys sorted; two-space indent and
    // a trailing newline make files diff-friendly and round-trip stable.
    return j.dump(2) + "\n";
}

}  // namespace

std::string manifest_to_json(const RunManifest& manifest) {
    json j{{"command", manifest.command},
           {"finished_at", manifest.finished_at},
           {"parameters", manifest.parameters},
           {"started_at", manifest.started_at},
           {"tool_version", manifest.tool_version},
           {"verdict_summary", summary_to_json(manifest.summary)}};
    return dump_canonical(j);
}

std::string verdicts_to_json(const std::vector<VerdictRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) {
        json details = json::object();
        for (const auto& [key, value] : r.details) details[key] = detail_to_json(value);
        arr.push_back(json{{"check_id", r.check_id},
                           {"details", details},
                           {"verdict", to_string(r.kind)}});
    }
    return dump_canonical(arr);
}

std::string canonicalize_json(const std::string& text) {
    return dump_canonical(json::parse(text));
}

VerdictSummary summarize_verdicts_json(const std::string& text) {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw UsageError("verdicts.json: expected a JSON array");
    VerdictSummary s;
    for (const auto& r : arr) {
        const std::string v = r.at("verdict").get<std::string>();
        if (v == "pass") ++s.pass;
        else if (v == "fail") ++s.fail;
        else if (v == "skipped") ++s.skipped;
        else if (v == "measured") ++s.measured;
        else throw UsageError("verdicts.json: unknown verdict '" + v + "'");
    }
    return s;
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i]);
    }
    out += "\r\n";
    return out;
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string make_run_id(const std::string& command,
                        const std::map<std::string, std::string>& parameters) {
    std::string canon = command;
    for (const auto& [k, v] : parameters) canon += "|" + k + "=" + v;
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::string name;
    for (char c : command) name += (c == ' ' ? '-' : c);
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
    return name + "-" + std::string(hex).substr(8);
}

ReportWriter::ReportWriter(std::string out_dir, std::string run_id) {
    std::filesystem::path dir = std::filesystem::path(out_dir) / run_id;
    std::filesystem::create_directories(dir);
    run_dir_ = dir.string();
}

void ReportWriter::write_text(const std::string& name, const std::string& contents) const {
    std::ofstream out(std::filesystem::path(run_dir_) / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + name + " under " + run_dir_);
    out << contents;
}

void ReportWriter::write_manifest(const RunManifest& manifest) const {
    write_text("manifest.json", manifest_to_json(manifest));
}

void ReportWriter::write_verdicts(const std::vector<VerdictRecord>& records) const {
    write_text("verdicts.json", verdicts_to_json(records));
}

void ReportWriter::write_csv(const std::string& name, const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) const {
    std::string text = csv_row(header);
    for (const auto& row : rows) text += csv_row(row);
    write_text(name, text);
}

}  // namespace primlab
