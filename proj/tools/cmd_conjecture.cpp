#include <fstream>
#include <sstream>

#include <primlab/conjectures.hpp>
#include <primlab/errors.hpp>
#include <primlab/report.hpp>

#include "cli_common.hpp"

namespace primlab::cli {

namespace {

const char* mode_name(WitnessMode mode) {
    return mode == WitnessMode::Sum ? "sum" : "difference";
}

}  // namespace

int run_conjecture(const Config& cfg, const std::string& kind, std::uint64_t limit,
                   std::uint64_t gap, const std::string& n_range, std::uint64_t bound,
                   std::uint64_t hist_limit) {
    RunOutput output;
    output.command = "conjecture " + kind;
    output.parameters = {{"kind", kind}};

    if (kind == "goldbach") {
        output.parameters["limit"] = std::to_string(limit);
        output.parameters["hist_limit"] = std::to_string(hist_limit);
        GoldbachScanOptions opts;
        opts.jobs = cfg.effective_jobs();
        opts.histogram_limit = hist_limit;
        const auto result = goldbach_scan(limit, opts);

        bool revalidated = revalidate_witness(result.hardest);
        for (const auto& w : result.sample) revalidated = revalidated && revalidate_witness(w);

        Details d{{"evens_scanned", result.evens_scanned},
                  {"failures", static_cast<std::uint64_t>(result.failures.size())},
                  {"hardest_even", result.hardest.even_target},
                  {"hardest_p", result.hardest.p},
                  {"revalidated", revalidated}};
        if (!result.failures.empty()) d["counterexample"] = result.failures.front();
        output.records.push_back({"goldbach.limit" + std::to_string(limit),
                                  result.failures.empty() && revalidated ? VerdictKind::Pass
                                                                         : VerdictKind::Fail,
                                  std::move(d)});

        CsvTable witnesses{"witnesses.csv", {"even", "p", "q", "mode"}, {}};
        for (const auto& w : result.sample)
            witnesses.rows.push_back({std::to_string(w.even_target), std::to_string(w.p),
                                      std::to_string(w.q), mode_name(w.mode)});
        output.tables.push_back(std::move(witnesses));

        CsvTable hist{"representation_histogram.csv", {"representations", "evens"}, {}};
        for (const auto& [reps, evens] : result.representation_histogram)
            hist.rows.push_back({std::to_string(reps), std::to_string(evens)});
        output.tables.push_back(std::move(hist));
    } else if (kind == "difference") {
        if (bound == 0) bound = limit + 10'000;
        output.parameters["limit"] = std::to_string(limit);
        output.parameters["bound"] = std::to_string(bound);
        const auto result = prime_difference_scan(limit, bound);
        Details d{{"witnesses", static_cast<std::uint64_t>(result.witnesses.size())},
                  {"unresolved", static_cast<std::uint64_t>(result.unresolved.size())}};
        output.records.push_back({"difference.limit" + std::to_string(limit),
                                  VerdictKind::Measured, std::move(d)});
        CsvTable witnesses{"witnesses.csv", {"even", "p", "q", "mode"}, {}};
        for (const auto& w : result.witnesses)
            witnesses.rows.push_back({std::to_string(w.even_target), std::to_string(w.p),
                                      std::to_string(w.q), mode_name(w.mode)});
        output.tables.push_back(std::move(witnesses));
    } else if (kind == "gaps") {
        output.parameters["limit"] = std::to_string(limit);
        output.parameters["gap"] = std::to_string(gap);
        const auto pairs = gap_pairs(limit, gap);
        bool cousin_form_ok = true;
        for (const auto& p : pairs)
            if (gap == 4 && p.lower > 3 && p.lower_mod6 != 1) cousin_form_ok = false;
        Details d{{"pairs", static_cast<std::uint64_t>(pairs.size())}};
        if (gap == 4) d["cousin_mod6_ok"] = cousin_form_ok;
        if (gap == 2) d["independent_count"] = twin_count_independent(limit);
        output.records.push_back({"gaps.limit" + std::to_string(limit) + ".g" +
                                      std::to_string(gap),
                                  VerdictKind::Measured, std::move(d)});
        CsvTable table{"gap_pairs.csv",
                       {"lower", "upper", "consecutive", "lower_mod6", "upper_mod6"},
                       {}};
        for (const auto& p : pairs)
            table.rows.push_back({std::to_string(p.lower), std::to_string(p.upper),
                                  p.consecutive ? "1" : "0", std::to_string(p.lower_mod6),
                                  std::to_string(p.upper_mod6)});
        output.tables.push_back(std::move(table));
    } else if (kind == "twin-window") {
        output.parameters["n"] = n_range;
        const auto [n_lo, n_hi] = parse_range(n_range);
        CsvTable table{"twin_windows.csv", {"n", "lower", "upper"}, {}};
        for (std::size_t n = n_lo; n <= n_hi; ++n) {
            const auto pairs = twin_in_coprime_window(n);
            Details d{{"pairs", static_cast<std::uint64_t>(pairs.size())}};
            if (pairs.empty()) d["counterexample"] = std::string("window produced no twin pair");
            output.records.push_back({"twin-window.n" + std::to_string(n),
                                      pairs.empty() ? VerdictKind::Fail : VerdictKind::Pass,
                                      std::move(d)});
            for (const auto& p : pairs)
                table.rows.push_back({std::to_string(n), std::to_string(p.lower),
                                      std::to_string(p.upper)});
        }
        output.tables.push_back(std::move(table));
    } else if (kind == "gap-equation") {
        output.parameters["n"] = n_range;
        output.parameters["gap"] = std::to_string(gap);
        const auto [n_lo, n_hi] = parse_range(n_range);
        CsvTable table{"gap_equation.csv",
                       {"n", "gap", "delta_l", "delta_cp", "identity_ok", "delta_l_in_bound"},
                       {}};
        for (std::size_t n = n_lo; n <= n_hi; ++n) {
            const auto sol = gap_equation_solve(n, static_cast<std::int64_t>(gap));
            const bool ok = sol.identity_ok && sol.delta_cp % 2 == 0 && sol.delta_cp >= 0;
            Details d{{"delta_l", sol.delta_l},
                      {"delta_cp", sol.delta_cp},
                      {"delta_l_in_bound", sol.delta_l_in_bound}};
            if (!ok) d["counterexample"] = sol.delta_cp;
            output.records.push_back({"gap-equation.n" + std::to_string(n) + ".g" +
                                          std::to_string(gap),
                                      ok ? VerdictKind::Pass : VerdictKind::Fail, std::move(d)});
            table.rows.push_back({std::to_string(n), std::to_string(gap),
                                  std::to_string(sol.delta_l), std::to_string(sol.delta_cp),
                                  sol.identity_ok ? "1" : "0",
                                  sol.delta_l_in_bound ? "1" : "0"});
        }
        output.tables.push_back(std::move(table));
    } else if (kind == "k-window") {
        output.parameters["n"] = n_range;
        const auto [n_lo, n_hi] = parse_range(n_range);
        CsvTable table{"k_window.csv",
                       {"n", "k", "window_primorial", "window_end", "coprimes", "audit_ok"},
                       {}};
        for (std::size_t n = std::max<std::size_t>(n_lo, 3); n <= n_hi; ++n) {
            const auto report = goldbach_k_window(n);
            bool ok = !report.feasible.empty();
            for (const auto& c : report.feasible) ok = ok && c.audit_ok;
            Details d{{"feasible", static_cast<std::uint64_t>(report.feasible.size())},
                      {"asymptotic_k", report.asymptotic_k},
                      {"p_next", report.p_next}};
            if (report.feasible.empty())
                d["counterexample"] = std::string("no k satisfies the sandwich");
            output.records.push_back({"k-window.n" + std::to_string(n),
                                      ok ? VerdictKind::Pass : VerdictKind::Fail, std::move(d)});
            for (const auto& c : report.feasible)
                table.rows.push_back({std::to_string(n), std::to_string(c.k),
                                      std::to_string(c.window_primorial),
                                      std::to_string(c.window_end),
                                      std::to_string(c.coprime_count), c.audit_ok ? "1" : "0"});
        }
        output.tables.push_back(std::move(table));
    } else {
        throw UsageError("unknown conjecture kind '" + kind +
                         "' (goldbach, difference, gaps, twin-window, gap-equation, k-window)");
    }
    return emit_run(cfg, output);
}

int run_report(const std::string& run_dir) {
    std::ifstream in(run_dir + "/verdicts.json", std::ios::binary);
    if (!in) throw UsageError("no verdicts.json under " + run_dir);
    std::ostringstream buf;
    buf << in.rdbuf();
    const VerdictSummary s = summarize_verdicts_json(buf.str());
    std::printf("pass=%llu fail=%llu skipped=%llu measured=%llu\n",
                static_cast<unsigned long long>(s.pass), static_cast<unsigned long long>(s.fail),
                static_cast<unsigned long long>(s.skipped),
                static_cast<unsigned long long>(s.measured));
    return s.fail == 0 ? 0 : 1;
}

}  // namespace primlab::cli
