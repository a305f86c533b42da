#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <primlab/config.hpp>
#include <primlab/errors.hpp>
#include <primlab/report.hpp>

using namespace primlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("verdict json is canonical and round-trips byte-identically") {
    std::vector<VerdictRecord> records{
        {"lemma3i.n5", VerdictKind::Pass, {{"modulus", std::uint64_t{2310}}}},
        {"lemma5.n4.k1", VerdictKind::Fail,
         {{"counterexample", std::int64_t{14}}, {"note", std::string{"missing even"}}}},
        {"psi.sample", VerdictKind::Measured,
         {{"relative_error", 0.0123}, {"exact", std::uint64_t{95389}}}},
    };
    const std::string text = verdicts_to_json(records);
    CHECK(canonicalize_json(text) == text);
    // keys inside a record are sorted
    CHECK(text.find("\"check_id\"") < text.find("\"details\""));
    CHECK(text.find("\"details\"") < text.find("\"verdict\""));
    // integers stay plain
    CHECK(text.find("2310") != std::string::npos);
    CHECK(text.find("e+") == std::string::npos);

    const VerdictSummary s = summarize_verdicts_json(text);
    CHECK(s.pass == 1);
    CHECK(s.fail == 1);
    CHECK(s.measured == 1);
    CHECK(s.skipped == 0);
}

TEST_CASE("manifest embeds the summary") {
    RunManifest m;
    m.command = "verify lemma3i";
    m.parameters = {{"n", "2..6"}, {"seed", "0"}};
    m.tool_version = "0.1.0";
    m.started_at = "2026-01-01T00:00:00Z";
    m.finished_at = "2026-01-01T00:00:01Z";
    m.summary.pass = 5;
    const std::string text = manifest_to_json(m);
    CHECK(canonicalize_json(text) == text);
    CHECK(text.find("\"verify lemma3i\"") != std::string::npos);
    CHECK(text.find("\"pass\": 5") != std::string::npos);
}

TEST_CASE("csv quoting follows rfc 4180") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("with,comma") == "\"with,comma\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_row({"a", "b,c", "d"}) == "a,\"b,c\",d\r\n");
}

TEST_CASE("run ids are deterministic in command and parameters") {
    const std::map<std::string, std::string> params{{"n", "2..6"}, {"seed", "0"}};
    CHECK(make_run_id("verify lemma3i", params) == make_run_id("verify lemma3i", params));
    CHECK(make_run_id("verify lemma3i", params) !=
          make_run_id("verify lemma3i", {{"n", "2..7"}, {"seed", "0"}}));
    CHECK(make_run_id("verify lemma3i", params).rfind("verify-lemma3i-", 0) == 0);
}

TEST_CASE("report writer lays out the run directory") {
    const auto dir = std::filesystem::temp_directory_path() / "primlab-test-report";
    std::filesystem::remove_all(dir);
    ReportWriter writer(dir.string(), "run-1");
    writer.write_verdicts({{"check.a", VerdictKind::Pass, {}}});
    writer.write_csv("table.csv", {"x", "y"}, {{"1", "2"}, {"3", "4"}});
    RunManifest m;
    m.command = "count pi";
    m.tool_version = "0.1.0";
    writer.write_manifest(m);

    CHECK(slurp(dir / "run-1" / "table.csv") == "x,y\r\n1,2\r\n3,4\r\n");
    CHECK(!slurp(dir / "run-1" / "verdicts.json").empty());
    CHECK(!slurp(dir / "run-1" / "manifest.json").empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("config precedence: flags beat env beat file") {
    const auto path = std::filesystem::temp_directory_path() / "primlab-test-config";
    {
        std::ofstream out(path);
        out << "# comment\ncap=1234\njobs=3\nout=file-dir\n";
    }
    setenv("PRIMLAB_CAP", "5678", 1);
    setenv("PRIMLAB_JOBS", "7", 1);

    ConfigOverrides flags;
    const Config from_env = resolve_config(flags, path.string());
    CHECK(from_env.cap == 5678);        // env beats file
    CHECK(from_env.jobs == 7);          // env beats file here too
    CHECK(from_env.out_dir == "file-dir");
    unsetenv("PRIMLAB_JOBS");
    CHECK(resolve_config(flags, path.string()).jobs == 3);  // file only

    flags.cap = 42;
    const Config from_flags = resolve_config(flags, path.string());
    CHECK(from_flags.cap == 42);        // flag beats env

    unsetenv("PRIMLAB_CAP");
    const Config defaults = resolve_config({}, "");
    CHECK(defaults.cap == kDefaultCap);
    CHECK(defaults.format == "json");
    CHECK(defaults.effective_jobs() >= 1);

    ConfigOverrides bad;
    bad.format = "xml";
    CHECK_THROWS_AS(resolve_config(bad, ""), UsageError);
    std::filesystem::remove(path);
}
