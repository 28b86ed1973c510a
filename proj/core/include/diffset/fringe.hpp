#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"
#include "diffset/rational.hpp"

namespace diffset {

inline constexpr int kFringeNaiveMaxM = 13;
inline constexpr int kFringeMaxM = 26;

/// counts[k] = number of S of [2m] (with 0, 2m-1 in S when conditioned)
/// realizing exactly m-k of the differences {m, ..., 2m-1}, k in [0, m].
/// The total is 4^m, or 4^(m-1) when conditioned.
struct FringeCounts {
    int m = 0;
    bool conditioned = false;
    std::vector<std::uint64_t> counts;

    unsigned log2_denominator() const noexcept {
        return static_cast<unsigned>(2 * (conditioned ? m - 1 : m));
    }
    std::uint64_t total() const;
    std::uint64_t at(int k) const {
        return k >= 0 && static_cast<std::size_t>(k) < counts.size()
                   ? counts[static_cast<std::size_t>(k)]
                   : 0;
    }
    friend bool operator==(const FringeCounts&, const FringeCounts&) = default;
};

/// Direct enumeration of S with a pairwise difference loop. The oracle for
/// fringe_fast; m <= 13, otherwise LimitExceeded.
FringeCounts fringe_naive(int m, bool conditioned);

struct FringeOptions {
    unsigned workers = 1;
    /// log2 of the number of chunks of the outer loop; negative picks a default
    /// (12 for m >= 18, fewer for small m).
    int chunk_bits = -1;
    std::optional<std::filesystem::path> checkpoint;
    ProgressFn progress;
    std::uint64_t chunk_budget = 0;
    /// Count each unordered {bottom, reflected top} pair once and double it.
    bool use_symmetry = true;
    /// Low bits of the inner mask resolved through a lookup table.
    int table_bits = 12;
};

/// Word-parallel kernel. Outer loop over bottom halves B of [m], sharded
/// into chunks; inner loop over top halves. Writing U for the top half
/// reflected to [0, m), the realized top differences are
/// m - 1 - ((U + B) intersect [0, m)), so the count only depends on the
/// restricted sumset of U and B and is symmetric in them.
FringeCounts fringe_fast(int m, bool conditioned, const FringeOptions& options = {});

/// counts[k] / 4^m, or counts[k] / 4^(m-1) when conditioned. std::out_of_range unless 0 <= k <= m.
DyadicRational fringe_prob(const FringeCounts& counts, int k);

/// Realized top differences for bottom half B = S & [0, m) and top half
/// rebased to [0, m): bit d is set iff m + d is in S-S. Computed as the
/// union over b in B of (top >> b).
std::uint64_t top_differences(std::uint64_t bottom, std::uint64_t top_rebased, int m) noexcept;

/// The published conditioned counts for m = 23.
FringeCounts published_conditioned_fringe_m23();

}  // namespace diffset
