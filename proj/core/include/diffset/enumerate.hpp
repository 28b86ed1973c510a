#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"
#include "diffset/power_bound.hpp"
#include "diffset/rational.hpp"

namespace diffset {

inline constexpr int kDefaultExhaustiveLimit = 30;
inline constexpr int kExhaustiveHardCap = 36;

/// counts[k] = #{S of [n] : |S-S| = k}, for k in [0, 2n-1] (a single entry when n = 0).
struct DiffCountTable {
    int n = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t at(int k) const {
        return k >= 0 && static_cast<std::size_t>(k) < counts.size()
                   ? counts[static_cast<std::size_t>(k)]
                   : 0;
    }
    friend bool operator==(const DiffCountTable&, const DiffCountTable&) = default;
};

/// counts[k] = #{S of [n] : 0, n-1 in S and |S-S| = k}; sums to 2^(n-2).
struct CondDiffCountTable {
    int n = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t at(int k) const {
        return k >= 0 && static_cast<std::size_t>(k) < counts.size()
                   ? counts[static_cast<std::size_t>(k)]
                   : 0;
    }
    friend bool operator==(const CondDiffCountTable&, const CondDiffCountTable&) = default;
};

struct EnumerateOptions {
    unsigned workers = 1;
    /// The subsets are split by their top `chunk_bits` elements into 2^chunk_bits chunks.
    int chunk_bits = 8;
    int exhaustive_limit = kDefaultExhaustiveLimit;
    /// Lifts the limit to kExhaustiveHardCap.
    bool long_run = false;
    std::optional<std::filesystem::path> checkpoint;
    ProgressFn progress;
    std::uint64_t chunk_budget = 0;
};

/// Throws LimitExceeded above the exhaustive limit, std::invalid_argument for n < 0.
DiffCountTable dist_table(int n, const EnumerateOptions& options = {});
/// Throws std::invalid_argument for n < 2.
CondDiffCountTable cond_dist_table(int n, const EnumerateOptions& options = {});

/// j -> P^M_n(j) = counts[2n-1-j] / 2^n for j in [0, 2n-1]. Requires n >= 1.
std::map<int, DyadicRational> missing_distribution(const DiffCountTable& table);
/// j -> q_n(j) = counts[2n-1-j] / 2^(n-2), the endpoint-conditioned analogue.
std::map<int, DyadicRational> missing_distribution(const CondDiffCountTable& table);

/// Every j attaining the maximum of P^M_n(j).
std::vector<int> argmax_missing(const DiffCountTable& table);

/// Exact mean of |S-S| over all S of [n].
Rational mean_diffset_size(const DiffCountTable& table);

/// a_L, the number of complete rulers of length L (R of {0..L} with {0..L} in R-R).
std::uint64_t complete_ruler_count(int length, const EnumerateOptions& options = {});

/// absent[k] = #{S : k not in S-S} for k in [0, n), over all S of [n] or,
/// when conditioned, over those with 0, n-1 in S. `population` is the number
/// of subsets considered.
struct AbsenceCounts {
    int n = 0;
    bool conditioned = false;
    std::uint64_t population = 0;
    std::vector<std::uint64_t> absent;
};
AbsenceCounts absence_counts(int n, bool conditioned);

/// Upper bound on P(k not in S-S) for uniform S of [n], 1 <= k <= n-1:
/// (3/4)^(n/3) when k <= 2n/3, else (3/4)^(n-k). Throws std::out_of_range.
PowerBound missing_complement_bound(int n, int k);

struct SampleHistogram {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string generator;
    /// counts[j] = number of trials missing exactly j differences, j in [0, 2n-1].
    std::vector<std::uint64_t> counts;

    friend bool operator==(const SampleHistogram&, const SampleHistogram&) = default;
};

inline constexpr const char* kSampleGenerator = "splitmix64-counter/v1";

/// Draws `trials` subsets of [n] (each element an independent fair coin)
/// from a counter-based generator keyed by `seed`; the histogram is identical
/// for any worker count.
SampleHistogram sample_missing(int n, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers = 1);

/// The maximizing missing counts of a histogram.
std::vector<int> argmax_missing(const SampleHistogram& histogram);

}  // namespace diffset
