#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <primlab/config.hpp>
#include <primlab/report.hpp>

namespace primlab::cli {

struct CsvTable {
    std::string name;  // file name, e.g. "witnesses.csv"
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Everything one subcommand run produces; emit() owns all output streams.
struct RunOutput {
    std::string command;                           // e.g. "verify lemma3i"
    std::map<std::string, std::string> parameters;
    std::vector<VerdictRecord> records;
    std::vector<CsvTable> tables;
};

/// Writes manifest.json / verdicts.json / *.csv under <out>/<run-id>/,
/// prints the summary to stdout in the configured format, and returns the
/// process exit code (0 clean, 1 when any verdict failed).
int emit_run(const Config& cfg, const RunOutput& output);

/// "4" -> (4,4); "2..6" -> (2,6). Throws UsageError otherwise.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text);

/// "3,5,7" -> {3,5,7}. Throws UsageError on malformed entries.
std::vector<std::uint64_t> parse_u64_list(const std::string& text);

int run_verify(const Config& cfg, const std::string& suite, const std::string& n_range,
               const std::string& k_range);
int run_count(const Config& cfg, const std::string& kind, std::uint64_t x, std::size_t n,
              const std::string& q_list, const std::string& m_range, double y);
int run_conjecture(const Config& cfg, const std::string& kind, std::uint64_t limit,
                   std::uint64_t gap, const std::string& n_range, std::uint64_t bound,
                   std::uint64_t hist_limit);
int run_report(const std::string& run_dir);

}  // namespace primlab::cli
