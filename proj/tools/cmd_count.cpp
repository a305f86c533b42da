#include <cmath>

#include <primlab/counting.hpp>
#include <primlab/errors.hpp>

#include "cli_common.hpp"

namespace primlab::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

int run_count(const Config& cfg, const std::string& kind, std::uint64_t x, std::size_t n,
              const std::string& q_list, const std::string& m_range, double y) {
    RunOutput output;
    output.command = "count " + kind;
    output.parameters = {{"kind", kind}, {"x", std::to_string(x)}};

    if (kind == "pi") {
        const std::uint64_t value = prime_pi(x);
        output.records.push_back({"pi.x" + std::to_string(x),
                                  VerdictKind::Measured,
                                  {{"exact", value}, {"engine", std::string("segmented-sieve")}}});
        output.tables.push_back({"pi.csv", {"x", "pi"}, {{std::to_string(x), std::to_string(value)}}});
    } else if (kind == "coprime-pi") {
        output.parameters["n"] = std::to_string(n);
        const std::uint64_t value = coprime_pi(x, n);
        output.records.push_back(
            {"coprime-pi.x" + std::to_string(x) + ".n" + std::to_string(n),
             VerdictKind::Measured,
             {{"exact", value}, {"engine", std::string("inclusion-exclusion+scan")}}});
        output.tables.push_back({"coprime_pi.csv",
                                 {"x", "n", "count"},
                                 {{std::to_string(x), std::to_string(n), std::to_string(value)}}});
    } else if (kind == "psi") {
        if (q_list.empty()) throw UsageError("count psi requires --q");
        output.parameters["q"] = q_list;
        output.parameters["y"] = fmt(y);
        const PrimeSetQ q = PrimeSetQ::make(parse_u64_list(q_list), y);
        const auto est = psi_estimate(x, y, q);
        const std::uint64_t recursive = psi_recursive(x, q);
        output.records.push_back({"psi.x" + std::to_string(x),
                                  VerdictKind::Measured,
                                  {{"exact", est.exact},
                                   {"engine", est.engine},
                                   {"recursive", recursive},
                                   {"product_estimate", est.product_estimate},
                                   {"product_rel_error", est.product_rel_error},
                                   {"mertens_estimate", est.mertens_estimate},
                                   {"mertens_rel_error", est.mertens_rel_error}}});
        output.tables.push_back(
            {"psi.csv",
             {"x", "q", "exact", "engine", "product_estimate", "product_rel_error",
              "mertens_estimate", "mertens_rel_error"},
             {{std::to_string(x), q_list, std::to_string(est.exact), est.engine,
               fmt(est.product_estimate), fmt(est.product_rel_error),
               fmt(est.mertens_estimate), fmt(est.mertens_rel_error)}}});
    } else if (kind == "error-profile") {
        output.parameters["n"] = std::to_string(n);
        output.parameters["m"] = m_range;
        const auto [m_lo, m_hi] = parse_range(m_range);
        if (m_lo == 0) throw UsageError("count error-profile: m must be >= 1");
        const auto rows = appendix_error_profile(x, n, m_hi);
        CsvTable table{"error_profile.csv",
                       {"m", "last_prime", "exact", "expected", "abs_error", "f", "ratio"},
                       {}};
        double fitted_c = 0;
        for (const auto& row : rows) {
            if (row.m < m_lo) continue;
            fitted_c = std::max(fitted_c, row.ratio);
            table.rows.push_back({std::to_string(row.m), std::to_string(row.last_prime),
                                  std::to_string(row.exact), fmt(row.expected),
                                  fmt(row.abs_error), fmt(row.f_value), fmt(row.ratio)});
        }
        output.records.push_back({"error-profile.x" + std::to_string(x),
                                  VerdictKind::Measured,
                                  {{"rows", static_cast<std::uint64_t>(table.rows.size())},
                                   {"fitted_c", fitted_c}}});
        output.tables.push_back(std::move(table));
    } else {
        throw UsageError("unknown count kind '" + kind +
                         "' (pi, coprime-pi, psi, error-profile)");
    }
    return emit_run(cfg, output);
}

}  // namespace primlab::cli
