#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace primlab {

enum class VerdictKind { Pass, Fail, Skipped, Measured };

const char* to_string(VerdictKind kind);

/// Detail payloads keep native types so integers serialize as JSON
/// numbers (never scientific notation) and fractions can stay exact as
/// numerator/denominator pairs.
using DetailValue = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;
using Details = std::map<std::string, DetailValue>;

struct VerdictRecord {
    std::string check_id;  // stable, e.g. "lemma3i.n5"
    VerdictKind kind = VerdictKind::Measured;
    Details details;  // fail records must carry a counterexample payload
};

struct VerdictSummary {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t skipped = 0;
    std::uint64_t measured = 0;
};

VerdictSummary summarize(const std::vector<VerdictRecord>& records);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string tool_version;
    std::string started_at;   // ISO-8601 UTC; the only fields allowed to
    std::string finished_at;  // differ between identical reruns
    VerdictSummary summary;
};

/// Canonical JSON: UTF-8, keys sorted, two-space indent, trailing newline.
std::string manifest_to_json(const RunManifest& manifest);
std::string verdicts_to_json(const std::vector<VerdictRecord>& records);

/// Parse + re-dump in canonical form; byte-identical for canonical input.
std::string canonicalize_json(const std::string& text);

/// Extracts the summary from a verdicts.json payload (for `report`).
VerdictSummary summarize_verdicts_json(const std::string& text);

/// RFC-4180: fields containing comma, quote or newline are quoted with
/// embedded quotes doubled.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

std::string iso8601_utc_now();

/// Deterministic run id: command words joined with '-' plus an FNV-1a
/// hash of the canonical parameter string.
std::string make_run_id(const std::string& command,
                        const std::map<std::string, std::string>& parameters);

// Owns the output directory of one run: <out>/<run-id>/. The writer is
// the single owner of its streams; workers hand records back instead of
// writing.
class ReportWriter {
public:
    ReportWriter(std::string out_dir, std::string run_id);

    const std::string& run_dir() const { return run_dir_; }

    void write_manifest(const RunManifest& manifest) const;
    void write_verdicts(const std::vector<VerdictRecord>& records) const;
    void write_csv(const std::string& name, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) const;
    void write_text(const std::string& name, const std::string& contents) const;

private:
    std::string run_dir_;
};

}  // namespace primlab
