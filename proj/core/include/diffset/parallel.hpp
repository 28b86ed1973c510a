#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "diffset/checkpoint.hpp"

namespace diffset {

/// Worker count from DIFFSET_WORKERS, else the hardware concurrency (>= 1).
unsigned default_workers();

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Thrown when a run stops early because its chunk budget ran out. Every
/// finished chunk is already in the checkpoint.
class RunInterrupted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ChunkedHistogramJob {
    std::uint64_t chunk_count = 1;
    std::size_t bins = 0;
    /// Fills `hist` (zeroed, `bins` long) with the counts of one chunk.
    std::function<void(std::uint64_t chunk, std::span<std::uint64_t> hist)> kernel;
};

struct ChunkedRunOptions {
    unsigned workers = 1;
    std::optional<std::filesystem::path> checkpoint;
    CheckpointHeader header;  // used only with a checkpoint
    ProgressFn progress;
    /// Stop (with RunInterrupted) after this many newly computed chunks; 0 = no limit.
    std::uint64_t chunk_budget = 0;
};

/// Runs every chunk of `job` on a pool of workers and returns the exact sum
/// of the per-chunk histograms. Chunks already present in the checkpoint are
/// taken from it. The result does not depend on the worker count.
std::vector<std::uint64_t> run_chunked_histogram(const ChunkedHistogramJob& job,
                                                 const ChunkedRunOptions& options);

}  // namespace diffset
