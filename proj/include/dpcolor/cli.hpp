#pragma once

#include <dpcolor/chromcount.hpp>
#include <dpcolor/genlib.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpcolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInput = 4;

/// Environment variable naming the cache directory when --cache-dir is absent.
inline constexpr const char* kCacheEnv = "DPCOLOR_CACHE_DIR";
/// Bumped whenever a cached report's layout changes; older entries are ignored.
inline constexpr int kCacheSchema = 1;

struct RunConfig {
    std::string command;
    std::optional<std::string> input;   // file path
    std::optional<GenSpec> gen;         // generator instead of a file
    std::optional<unsigned> k;
    std::optional<unsigned> kmin;
    std::optional<unsigned> kmax;
    std::optional<std::size_t> edge;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t budget = Budget{}.limit;
    std::string format = "json";
    std::optional<std::string> cache_dir;
    unsigned workers = 1;
    bool pruning = false;
};

struct RunOutput {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Executes one command. Never throws; failures become an exit code and a
/// JSON error object on `err`.
RunOutput run(const RunConfig& config);

/// Parses argv-style arguments (without the program name) and runs them.
/// The cache directory falls back to $DPCOLOR_CACHE_DIR.
RunOutput run_args(const std::vector<std::string>& args);

} // namespace dpcolor::cli
