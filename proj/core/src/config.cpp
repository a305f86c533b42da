#include "primlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include "primlab/errors.hpp"
#include "primlab/pool.hpp"

namespace primlab {

unsigned Config::effective_jobs() const {
    return jobs == 0 ? default_jobs() : jobs;
}

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": expected an unsigned integer, got '" + text + "'");
    }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    if (!in) throw UsageError("config file not readable: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config file: expected key=value, got '" + line + "'");
        out[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return out;
}

}  // namespace

Config resolve_config(const ConfigOverrides& flags, const std::string& config_path) {
    Config cfg;

    if (!config_path.empty()) {
        for (const auto& [key, value] : read_config_file(config_path)) {
            if (key == "cap") cfg.cap = parse_u64(value, "config cap");
            else if (key == "jobs") cfg.jobs = static_cast<unsigned>(parse_u64(value, "config jobs"));
            else if (key == "seed") cfg.seed = parse_u64(value, "config seed");
            else if (key == "out") cfg.out_dir = value;
            else if (key == "format") cfg.format = value;
        }
    }

    if (const char* env = std::getenv("PRIMLAB_CAP")) cfg.cap = parse_u64(env, "PRIMLAB_CAP");
    if (const char* env = std::getenv("PRIMLAB_JOBS"))
        cfg.jobs = static_cast<unsigned>(parse_u64(env, "PRIMLAB_JOBS"));

    if (flags.cap) cfg.cap = *flags.cap;
    if (flags.jobs) cfg.jobs = *flags.jobs;
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.out_dir) cfg.out_dir = *flags.out_dir;
    if (flags.format) cfg.format = *flags.format;

    if (cfg.format != "json" && cfg.format != "csv")
        throw UsageError("format must be 'json' or 'csv', got '" + cfg.format + "'");
    return cfg;
}

}  // namespace primlab
