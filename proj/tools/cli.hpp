#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace diffset::cli {

enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Exhaustive sizes from this n on, and fringe runs from this m on, need --long-run.
inline constexpr int kLongRunN = 31;
inline constexpr int kLongRunM = 20;

struct RunConfig {
    std::string subcommand;
    int n = 0;
    int m = 18;
    int max_length = 0;
    bool conditioned = false;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1'000'000;
    Format format = Format::csv;
    std::optional<std::string> output;
    std::optional<std::string> checkpoint;
    bool long_run = false;
    bool progress = false;

    // bounds
    std::optional<std::string> counts_path;
    bool published_counts = false;
    bool clip_j = true;
    int max_k = 30;

    // peak
    bool scan = false;
};

/// Parses a command line. Returns the config, or an exit status when parsing
/// ended the run (help requested, or invalid flags, reported on `err`).
struct ParseResult {
    std::optional<RunConfig> config;
    int exit_code = kExitOk;
};
ParseResult parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Throws std::invalid_argument naming the first violated constraint.
void validate(const RunConfig& config);

/// Runs one subcommand. Results go to the output file (or `out`), diagnostics
/// to `err`. Returns kExitOk, kExitInconclusive or kExitError.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diffset::cli
