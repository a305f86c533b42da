#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "primlab/basis.hpp"

namespace primlab {

// Effective tool configuration. Precedence: command-line flags, then
// PRIMLAB_* environment variables, then the --config key=value file,
// then defaults.
struct Config {
    std::uint64_t cap = kDefaultCap;
    unsigned jobs = 0;  // 0 = logical cores
    std::uint64_t seed = 0;
    std::string out_dir = "primlab-runs";
    std::string format = "json";  // json | csv

    unsigned effective_jobs() const;
};

struct ConfigOverrides {
    std::optional<std::uint64_t> cap;
    std::optional<unsigned> jobs;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
};

/// Flags beat environment beats config file. Unknown file keys are
/// ignored; malformed values throw UsageError.
Config resolve_config(const ConfigOverrides& flags, const std::string& config_path = "");

}  // namespace primlab
