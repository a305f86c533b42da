#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <primlab/report.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path scratch_root() {
    const auto dir = fs::temp_directory_path() / "primlab-cli-tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const fs::path out_file = scratch_root() / "stdout.txt";
    const std::string cmd =
        env + " " + std::string(PRIMLAB_BIN) + " " + args + " > " + out_file.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.out = buf.str();
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path single_run_dir(const fs::path& out_root) {
    REQUIRE(fs::exists(out_root));
    fs::path found;
    int count = 0;
    for (const auto& entry : fs::directory_iterator(out_root)) {
        ++count;
        found = entry.path();
    }
    REQUIRE(count == 1);
    return found;
}

}  // namespace

TEST_CASE("verify exits 0 and writes a canonical report") {
    const fs::path out = scratch_root() / "verify-ok";
    fs::remove_all(out);
    const auto r = run_cli("verify --suite lemma3i --n 2..4 --out " + out.string());
    CHECK(r.exit_code == 0);

    const fs::path run_dir = single_run_dir(out);
    const std::string verdicts = slurp(run_dir / "verdicts.json");
    CHECK(primlab::canonicalize_json(verdicts) == verdicts);

    const json arr = json::parse(verdicts);
    REQUIRE(arr.size() == 3);
    for (const auto& rec : arr) CHECK(rec.at("verdict") == "pass");

    const json manifest = json::parse(slurp(run_dir / "manifest.json"));
    CHECK(manifest.at("command") == "verify lemma3i");
    CHECK(manifest.at("verdict_summary").at("pass") == 3);
    CHECK(fs::exists(run_dir / "verify_records.csv"));
}

TEST_CASE("verdict payloads are identical across reruns and job counts") {
    const fs::path out1 = scratch_root() / "det-1";
    const fs::path out2 = scratch_root() / "det-2";
    const fs::path out3 = scratch_root() / "det-3";
    for (const auto& d : {out1, out2, out3}) fs::remove_all(d);
    CHECK(run_cli("verify --suite lemma5 --n 3..4 --k 1..2 --jobs 1 --out " + out1.string())
              .exit_code == 0);
    CHECK(run_cli("verify --suite lemma5 --n 3..4 --k 1..2 --jobs 4 --out " + out2.string())
              .exit_code == 0);
    CHECK(run_cli("verify --suite lemma5 --n 3..4 --k 1..2 --jobs 4 --out " + out3.string())
              .exit_code == 0);
    const std::string v1 = slurp(single_run_dir(out1) / "verdicts.json");
    const std::string v2 = slurp(single_run_dir(out2) / "verdicts.json");
    const std::string v3 = slurp(single_run_dir(out3) / "verdicts.json");
    CHECK(v1 == v2);
    CHECK(v2 == v3);

    // the narrow (3,2) window passes in reduced form with its unreduced
    // coverage fraction reported as 1/3
    const json arr = json::parse(v1);
    REQUIRE(arr.size() == 4);
    for (const auto& rec : arr) {
        if (rec.at("check_id") != "lemma5.n3.k2") continue;
        CHECK(rec.at("verdict") == "pass");
        CHECK(rec.at("details").at("coverage_covered") == 1);
        CHECK(rec.at("details").at("coverage_expected") == 3);
        CHECK(rec.at("details").at("unreduced_ok") == false);
        CHECK(rec.at("details").at("sweep_reduced_full") == 31);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("conjecture goldbach --limit 999").exit_code == 2);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
    CHECK(run_cli("count pi").exit_code == 2);           // missing --x
    CHECK(run_cli("verify --suite lemma3i --n 6..2").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                   // subcommand required
}

TEST_CASE("cap exhaustion exits 3, from flag and from environment") {
    const fs::path out = scratch_root() / "cap";
    fs::remove_all(out);
    CHECK(run_cli("verify --suite lemma3i --n 9 --out " + out.string()).exit_code == 3);
    CHECK(run_cli("verify --suite lemma3i --n 5 --cap 100 --out " + out.string()).exit_code == 3);
    CHECK(run_cli("verify --suite lemma3i --n 5 --out " + out.string(),
                  "PRIMLAB_CAP=100").exit_code == 3);
    // flag wins over the environment
    CHECK(run_cli("verify --suite lemma3i --n 5 --cap 10000000 --out " + out.string(),
                  "PRIMLAB_CAP=100").exit_code == 0);
}

TEST_CASE("count psi reports the worked value") {
    const fs::path out = scratch_root() / "count-psi";
    fs::remove_all(out);
    const auto r = run_cli("count psi --x 30 --q 3,5 --y 2 --out " + out.string());
    CHECK(r.exit_code == 0);
    const json arr = json::parse(slurp(single_run_dir(out) / "verdicts.json"));
    REQUIRE(arr.size() == 1);
    CHECK(arr[0].at("details").at("exact") == 16);
    CHECK(arr[0].at("verdict") == "measured");
}

TEST_CASE("count error-profile emits the requested rows") {
    const fs::path out = scratch_root() / "count-profile";
    fs::remove_all(out);
    const auto r = run_cli("count error-profile --x 100000 --n 1 --m 1..8 --out " + out.string());
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(single_run_dir(out) / "error_profile.csv");
    // header plus eight rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}

TEST_CASE("conjecture gaps emits eight twin rows under 100") {
    const fs::path out = scratch_root() / "gaps";
    fs::remove_all(out);
    const auto r = run_cli("conjecture gaps --limit 100 --gap 2 --out " + out.string());
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(single_run_dir(out) / "gap_pairs.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
    CHECK(csv.find("3,5,1") == csv.find("3,5"));  // first row after the header
}

TEST_CASE("conjecture gap-equation reproduces the worked solution") {
    const fs::path out = scratch_root() / "gap-eq";
    fs::remove_all(out);
    const auto r = run_cli("conjecture gap-equation --n 2 --gap 2 --out " + out.string());
    CHECK(r.exit_code == 0);
    const json arr = json::parse(slurp(single_run_dir(out) / "verdicts.json"));
    REQUIRE(arr.size() == 1);
    CHECK(arr[0].at("details").at("delta_l") == -3);
    CHECK(arr[0].at("details").at("delta_cp") == 4);
}

TEST_CASE("report mirrors verdict outcomes in its exit code") {
    const fs::path pass_dir = scratch_root() / "report-pass";
    fs::remove_all(pass_dir);
    fs::create_directories(pass_dir);
    {
        std::ofstream v(pass_dir / "verdicts.json");
        v << R"([{"check_id":"a","details":{},"verdict":"pass"}])";
    }
    CHECK(run_cli("report " + pass_dir.string()).exit_code == 0);

    const fs::path fail_dir = scratch_root() / "report-fail";
    fs::remove_all(fail_dir);
    fs::create_directories(fail_dir);
    {
        std::ofstream v(fail_dir / "verdicts.json");
        v << R"([{"check_id":"a","details":{"counterexample":14},"verdict":"fail"}])";
    }
    CHECK(run_cli("report " + fail_dir.string()).exit_code == 1);
    CHECK(run_cli("report " + (scratch_root() / "missing").string()).exit_code == 2);
}

TEST_CASE("config file is read and loses to flags") {
    const fs::path out = scratch_root() / "config";
    const fs::path cfg = scratch_root() / "primlab.conf";
    fs::remove_all(out);
    {
        std::ofstream c(cfg);
        c << "cap=100\n";
    }
    CHECK(run_cli("verify --suite lemma3i --n 5 --config " + cfg.string() + " --out " +
                  out.string()).exit_code == 3);
    CHECK(run_cli("verify --suite lemma3i --n 5 --cap 10000000 --config " + cfg.string() +
                  " --out " + out.string()).exit_code == 0);
}

TEST_CASE("csv summary format") {
    const fs::path out = scratch_root() / "fmt";
    fs::remove_all(out);
    const auto r = run_cli("count pi --x 100 --format csv --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("command,pass,fail", 0) == 0);
    CHECK(run_cli("count pi --x 100 --format xml --out " + out.string()).exit_code == 2);
}
