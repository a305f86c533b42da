// primlab: construct primorial coprime residue systems, verify their
// difference-set identities, count coprimes exactly and asymptotically,
// and run desk-scale conjecture scans with machine-readable reports.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <primlab/errors.hpp>
#include <primlab/report.hpp>
#include <primlab/version.hpp>

#include "cli_common.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

}  // namespace

namespace primlab::cli {

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const std::uint64_t v = std::stoull(text);
            return {v, v};
        }
        const std::uint64_t lo = std::stoull(text.substr(0, dots));
        const std::uint64_t hi = std::stoull(text.substr(dots + 2));
        if (lo > hi) throw UsageError("range lower bound exceeds upper: " + text);
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("expected N or A..B, got '" + text + "'");
    }
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) {
            try {
                out.push_back(std::stoull(item));
            } catch (const std::exception&) {
                throw UsageError("expected a comma-separated integer list, got '" + text + "'");
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int emit_run(const Config& cfg, const RunOutput& output) {
    RunManifest manifest;
    manifest.command = output.command;
    manifest.parameters = output.parameters;
    manifest.tool_version = kVersion;
    manifest.started_at = iso8601_utc_now();
    manifest.summary = summarize(output.records);

    const std::string run_id = make_run_id(output.command, output.parameters);
    ReportWriter writer(cfg.out_dir, run_id);
    writer.write_verdicts(output.records);
    for (const auto& table : output.tables)
        writer.write_csv(table.name, table.header, table.rows);
    manifest.finished_at = iso8601_utc_now();
    writer.write_manifest(manifest);

    const auto& s = manifest.summary;
    if (cfg.format == "json") {
        nlohmann::json j{{"command", output.command},
                         {"fail", s.fail},
                         {"measured", s.measured},
                         {"pass", s.pass},
                         {"run_dir", writer.run_dir()},
                         {"skipped", s.skipped}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "command,pass,fail,skipped,measured,run_dir\r\n"
                  << csv_row({output.command, std::to_string(s.pass), std::to_string(s.fail),
                              std::to_string(s.skipped), std::to_string(s.measured),
                              writer.run_dir()});
    }
    return s.fail == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace primlab::cli

int main(int argc, char** argv) {
    using namespace primlab;
    using namespace primlab::cli;

    CLI::App app{"primorial coprime residue systems: identity verification, "
                 "coprime counting, conjecture scans"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough();
    app.require_subcommand(1);

    ConfigOverrides overrides;
    std::string config_path;
    app.add_option("--jobs", overrides.jobs, "worker pool size (default: logical cores)");
    app.add_option("--seed", overrides.seed, "seed for randomized spot checks (default 0)");
    app.add_option("--cap", overrides.cap, "materialization cap in bits (default 10^7)");
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--format", overrides.format, "stdout summary format: json|csv");
    app.add_option("--out", overrides.out_dir, "report output directory");

    auto* verify = app.add_subcommand("verify", "run identity check suites");
    std::string suite, n_range = "2..6", k_range;
    verify->add_option("--suite", suite, "suite selector")->required();
    verify->add_option("--n", n_range, "basis range A..B");
    verify->add_option("--k", k_range, "depth range A..B (window suites)");

    auto* count = app.add_subcommand("count", "exact and asymptotic counting tables");
    std::string count_kind, q_list, m_range = "1..8";
    std::uint64_t count_x = 0;
    std::size_t count_n = 1;
    double count_y = 1.5;
    count->add_option("kind", count_kind, "pi | coprime-pi | psi | error-profile")->required();
    count->add_option("--x", count_x, "upper bound")->required();
    count->add_option("--n", count_n, "prime count (coprime-pi, error-profile)");
    count->add_option("--q", q_list, "comma-separated primes (psi)");
    count->add_option("--m", m_range, "m range (error-profile)");
    count->add_option("--y", count_y, "y floor (psi estimates)");

    auto* conjecture = app.add_subcommand("conjecture", "desk-scale conjecture scans");
    std::string conj_kind, conj_n_range = "2..8";
    std::uint64_t conj_limit = 1'000'000, conj_gap = 2, conj_bound = 0, conj_hist = 100'000;
    conjecture
        ->add_option("kind", conj_kind,
                     "goldbach | difference | gaps | twin-window | gap-equation | k-window")
        ->required();
    conjecture->add_option("--limit", conj_limit, "scan limit (default 10^6)");
    conjecture->add_option("--gap", conj_gap, "even gap (default 2)");
    conjecture->add_option("--n", conj_n_range, "basis range A..B");
    conjecture->add_option("--bound", conj_bound, "search bound (difference scans)");
    conjecture->add_option("--hist-limit", conj_hist,
                           "upper bound for the representation histogram");

    auto* report = app.add_subcommand("report", "summarize an existing run directory");
    std::string report_dir;
    report->add_option("dir", report_dir, "run directory with verdicts.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Config cfg = resolve_config(overrides, config_path);
        if (verify->parsed()) return run_verify(cfg, suite, n_range, k_range);
        if (count->parsed())
            return run_count(cfg, count_kind, count_x, count_n, q_list, m_range, count_y);
        if (conjecture->parsed())
            return run_conjecture(cfg, conj_kind, conj_limit, conj_gap, conj_n_range,
                                  conj_bound, conj_hist);
        if (report->parsed()) return run_report(report_dir);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
