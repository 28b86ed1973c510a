#include <algorithm>
#include <bit>
#include <string>

#include "diffset/enumerate.hpp"
#include "diffset/subset_mask.hpp"

namespace diffset {

namespace {

constexpr std::uint64_t kTrialsPerChunk = 4096;
constexpr int kMaxSampleWidth = 1 << 16;
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// D |= S >> shift over multi-word little-endian bitsets of equal length.
void or_shifted_right(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                      std::size_t shift) {
    const std::size_t words = src.size();
    const std::size_t q = shift / 64;
    const unsigned r = static_cast<unsigned>(shift % 64);
    if (r == 0) {
        for (std::size_t i = 0; i + q < words; ++i) dst[i] |= src[i + q];
        return;
    }
    for (std::size_t i = 0; i + q < words; ++i) {
        std::uint64_t v = src[i + q] >> r;
        if (i + q + 1 < words) v |= src[i + q + 1] << (64 - r);
        dst[i] |= v;
    }
}

}  // namespace

SampleHistogram sample_missing(int n, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    if (n < 1 || n > kMaxSampleWidth) {
        throw std::invalid_argument("sample width must lie in [1, " +
                                    std::to_string(kMaxSampleWidth) + "]");
    }
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    const std::uint64_t tail_mask = low_mask(n % 64 == 0 ? 64 : n % 64);
    const std::uint64_t key = mix64(seed);
    const std::size_t bins = 2 * static_cast<std::size_t>(n);

    ChunkedHistogramJob job;
    job.chunk_count = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
    job.bins = bins;
    job.kernel = [=](std::uint64_t chunk, std::span<std::uint64_t> hist) {
        std::vector<std::uint64_t> set(words);
        std::vector<std::uint64_t> diffs(words);
        const std::uint64_t first = chunk * kTrialsPerChunk;
        const std::uint64_t last = std::min(trials, first + kTrialsPerChunk);
        for (std::uint64_t t = first; t < last; ++t) {
            for (std::size_t w = 0; w < words; ++w) {
                set[w] = mix64(key + (t * words + w + 1) * kGolden);
            }
            set[words - 1] &= tail_mask;
            std::fill(diffs.begin(), diffs.end(), 0);
            for (std::size_t w = 0; w < words; ++w) {
                for (std::uint64_t rest = set[w]; rest != 0; rest &= rest - 1) {
                    or_shifted_right(diffs, set, 64 * w + static_cast<std::size_t>(std::countr_zero(rest)));
                }
            }
            std::size_t present = 0;
            for (std::uint64_t d : diffs) present += static_cast<std::size_t>(std::popcount(d));
            // present counts 0 and the positive differences; |S-S| = 2*present - 1.
            const std::size_t size = present == 0 ? 0 : 2 * present - 1;
            ++hist[bins - 1 - size];
        }
    };
    ChunkedRunOptions ro;
    ro.workers = workers;

    SampleHistogram out;
    out.n = n;
    out.trials = trials;
    out.seed = seed;
    out.generator = kSampleGenerator;
    out.counts = run_chunked_histogram(job, ro);
    return out;
}

std::vector<int> argmax_missing(const SampleHistogram& histogram) {
    std::uint64_t best = 0;
    std::vector<int> out;
    for (std::size_t j = 0; j < histogram.counts.size(); ++j) {
        const std::uint64_t v = histogram.counts[j];
        if (v > best) {
            best = v;
            out.assign(1, static_cast<int>(j));
        } else if (v == best && v > 0) {
            out.push_back(static_cast<int>(j));
        }
    }
    return out;
}

}  // namespace diffset
