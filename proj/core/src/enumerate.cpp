#include "diffset/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "diffset/subset_mask.hpp"

namespace diffset {

namespace {

constexpr int kAbsenceLimit = 24;

int effective_limit(const EnumerateOptions& options) {
    return options.long_run ? kExhaustiveHardCap
                            : std::min(options.exhaustive_limit, kExhaustiveHardCap);
}

void check_limit(int n, const EnumerateOptions& options) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const int limit = effective_limit(options);
    if (n > limit) {
        std::string msg = "n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                          std::to_string(limit) + "; use sampling (`sample`) for large n";
        if (!options.long_run && n <= kExhaustiveHardCap) {
            msg += ", or pass the long-run override (up to n = " +
                   std::to_string(kExhaustiveHardCap) + ")";
        }
        throw LimitExceeded(msg);
    }
}

inline std::size_t size_bin(std::uint64_t diffs) noexcept {
    return 2 * static_cast<std::size_t>(std::popcount(diffs >> 1)) + (diffs & 1U);
}

// Visits every subset of positions [lowest, pos] added to `set`, elements
// chosen from the top down. Adding x to a set whose elements all exceed x
// contributes exactly the differences (set >> x), so each node costs one OR.
// With PinZero, element 0 is added to every leaf.
template <bool PinZero>
void descend(int pos, int lowest, std::uint64_t set, std::uint64_t diffs, std::uint64_t* hist) {
    if (pos < lowest) {
        if constexpr (PinZero) {
            set |= 1U;
            diffs |= set;
        }
        ++hist[size_bin(diffs)];
        return;
    }
    if (pos == lowest && !PinZero) {
        ++hist[size_bin(diffs)];
        const std::uint64_t with = set | (std::uint64_t{1} << pos);
        ++hist[size_bin(diffs | (with >> pos))];
        return;
    }
    descend<PinZero>(pos - 1, lowest, set, diffs, hist);
    const std::uint64_t with = set | (std::uint64_t{1} << pos);
    descend<PinZero>(pos - 1, lowest, with, diffs | (with >> pos), hist);
}

ChunkedRunOptions run_options(const EnumerateOptions& options, int n, bool conditioned,
                              std::uint64_t chunks, std::size_t bins) {
    ChunkedRunOptions ro;
    ro.workers = options.workers;
    ro.checkpoint = options.checkpoint;
    ro.progress = options.progress;
    ro.chunk_budget = options.chunk_budget;
    ro.header.magic = kDistMagic;
    ro.header.parameter = static_cast<std::uint32_t>(n);
    ro.header.flags = conditioned ? 1 : 0;
    ro.header.chunk_count = static_cast<std::uint32_t>(chunks);
    ro.header.bins = static_cast<std::uint32_t>(bins);
    return ro;
}

int clamp_chunk_bits(int requested, int free_bits) {
    return std::clamp(requested, 0, std::min(free_bits, 24));
}

}  // namespace

DiffCountTable dist_table(int n, const EnumerateOptions& options) {
    check_limit(n, options);
    DiffCountTable table;
    table.n = n;
    if (n == 0) {
        table.counts = {1};
        return table;
    }
    const int c = clamp_chunk_bits(options.chunk_bits, n);
    const int low_bits = n - c;
    const std::size_t bins = 2 * static_cast<std::size_t>(n);

    ChunkedHistogramJob job;
    job.chunk_count = std::uint64_t{1} << c;
    job.bins = bins;
    job.kernel = [low_bits](std::uint64_t chunk, std::span<std::uint64_t> hist) {
        const std::uint64_t high = chunk << low_bits;
        const std::uint64_t diffs = nonnegative_differences(high);
        if (low_bits == 0) {
            ++hist[size_bin(diffs)];
            return;
        }
        descend<false>(low_bits - 1, 0, high, diffs, hist.data());
    };
    table.counts = run_chunked_histogram(
        job, run_options(options, n, false, job.chunk_count, bins));
    return table;
}

CondDiffCountTable cond_dist_table(int n, const EnumerateOptions& options) {
    if (n < 2) throw std::invalid_argument("conditioned table needs n >= 2");
    check_limit(n, options);
    const int free_bits = n - 2;  // positions 1 .. n-2
    const int c = clamp_chunk_bits(options.chunk_bits, free_bits);
    const int below = free_bits - c;  // free positions 1 .. below stay for the DFS
    const std::size_t bins = 2 * static_cast<std::size_t>(n);

    ChunkedHistogramJob job;
    job.chunk_count = std::uint64_t{1} << c;
    job.bins = bins;
    job.kernel = [n, below](std::uint64_t chunk, std::span<std::uint64_t> hist) {
        const std::uint64_t high = (std::uint64_t{1} << (n - 1)) | (chunk << (below + 1));
        descend<true>(below, 1, high, nonnegative_differences(high), hist.data());
    };
    CondDiffCountTable table;
    table.n = n;
    table.counts = run_chunked_histogram(
        job, run_options(options, n, true, job.chunk_count, bins));
    return table;
}

std::map<int, DyadicRational> missing_distribution(const DiffCountTable& table) {
    if (table.n < 1) throw std::invalid_argument("missing distribution needs n >= 1");
    std::map<int, DyadicRational> out;
    const int top = 2 * table.n - 1;
    for (int j = 0; j <= top; ++j) {
        out.emplace(j, DyadicRational::from_count(table.at(top - j),
                                                  static_cast<unsigned>(table.n)));
    }
    return out;
}

std::map<int, DyadicRational> missing_distribution(const CondDiffCountTable& table) {
    if (table.n < 2) throw std::invalid_argument("conditioned distribution needs n >= 2");
    std::map<int, DyadicRational> out;
    const int top = 2 * table.n - 1;
    for (int j = 0; j <= top; ++j) {
        out.emplace(j, DyadicRational::from_count(table.at(top - j),
                                                  static_cast<unsigned>(table.n - 2)));
    }
    return out;
}

std::vector<int> argmax_missing(const DiffCountTable& table) {
    if (table.n < 1) throw std::invalid_argument("argmax needs n >= 1");
    const int top = 2 * table.n - 1;
    std::uint64_t best = 0;
    std::vector<int> out;
    for (int j = 0; j <= top; ++j) {
        const std::uint64_t v = table.at(top - j);
        if (v > best) {
            best = v;
            out.assign(1, j);
        } else if (v == best && v > 0) {
            out.push_back(j);
        }
    }
    return out;
}

Rational mean_diffset_size(const DiffCountTable& table) {
    Integer sum = 0;
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
        sum += to_integer(table.counts[k]) * static_cast<unsigned long>(k);
    }
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(table.n));
    Rational q(sum, denom);
    q.canonicalize();
    return q;
}

std::uint64_t complete_ruler_count(int length, const EnumerateOptions& options) {
    if (length < 0) throw std::invalid_argument("ruler length must be >= 0");
    const DiffCountTable table = dist_table(length + 1, options);
    return table.at(2 * length + 1);
}

AbsenceCounts absence_counts(int n, bool conditioned) {
    if (n < (conditioned ? 2 : 0)) throw std::invalid_argument("n too small");
    if (n > kAbsenceLimit) {
        throw LimitExceeded("absence counts are exhaustive; n <= " +
                            std::to_string(kAbsenceLimit));
    }
    AbsenceCounts out;
    out.n = n;
    out.conditioned = conditioned;
    out.absent.assign(static_cast<std::size_t>(n), 0);
    const std::uint64_t ends = n >= 2 ? (std::uint64_t{1} | (std::uint64_t{1} << (n - 1))) : 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (conditioned && (s & ends) != ends) continue;
        ++out.population;
        const std::uint64_t missing = ~nonnegative_differences(s) & low_mask(n);
        for (std::uint64_t rest = missing; rest != 0; rest &= rest - 1) {
            ++out.absent[static_cast<std::size_t>(std::countr_zero(rest))];
        }
    }
    return out;
}

PowerBound missing_complement_bound(int n, int k) {
    if (k < 1 || k > n - 1) {
        throw std::out_of_range("missing_complement_bound needs 1 <= k <= n-1, got n = " +
                                std::to_string(n) + ", k = " + std::to_string(k));
    }
    const Rational three_quarters(3, 4);
    if (3 * k <= 2 * n) return PowerBound(1, three_quarters, n, 3);
    return PowerBound(1, three_quarters, n - k);
}

}  // namespace diffset
