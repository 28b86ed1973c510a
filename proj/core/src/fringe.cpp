#include "diffset/fringe.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "diffset/reference_data.hpp"
#include "diffset/subset_mask.hpp"

namespace diffset {

namespace {

void check_m(int m, int cap, const char* what) {
    if (m < 1) throw std::invalid_argument("fringe half-width m must be >= 1");
    if (m > cap) {
        throw LimitExceeded(std::string(what) + " supports m <= " + std::to_string(cap) +
                            ", got m = " + std::to_string(m));
    }
}

// Four interleaved histograms indexed by popcount, so consecutive increments
// rarely hit the same counter.
struct SplitHistogram {
    std::array<std::array<std::uint64_t, 65>, 4> lanes{};

    void add_to(std::vector<std::uint64_t>& by_popcount, std::uint64_t weight) const {
        for (std::size_t b = 0; b < by_popcount.size(); ++b) {
            std::uint64_t sum = 0;
            for (const auto& lane : lanes) checked_add(sum, lane[b]);
            checked_add(by_popcount[b], sum * weight);
        }
    }
};

// hist[popcount(high | low[i])] += 1 for i in [begin, end).
inline void scan(std::uint64_t high, const std::uint64_t* low, std::size_t begin, std::size_t end,
                 std::uint64_t full, int m, SplitHistogram& hist) {
    if (begin >= end) return;
    if (high == full) {
        hist.lanes[0][static_cast<std::size_t>(m)] += end - begin;
        return;
    }
    std::size_t i = begin;
    auto& h0 = hist.lanes[0];
    auto& h1 = hist.lanes[1];
    auto& h2 = hist.lanes[2];
    auto& h3 = hist.lanes[3];
    for (; i + 4 <= end; i += 4) {
        ++h0[static_cast<std::size_t>(std::popcount(high | low[i]))];
        ++h1[static_cast<std::size_t>(std::popcount(high | low[i + 1]))];
        ++h2[static_cast<std::size_t>(std::popcount(high | low[i + 2]))];
        ++h3[static_cast<std::size_t>(std::popcount(high | low[i + 3]))];
    }
    for (; i < end; ++i) ++h0[static_cast<std::size_t>(std::popcount(high | low[i]))];
}

struct KernelShape {
    int m = 0;
    int pin = 0;         // 1 when bit 0 of both masks is forced
    int low_bits = 0;    // table-resolved low bits of the inner mask
    int chunk_bits = 0;
    bool symmetric = true;
};

// One chunk: every outer mask whose index is congruent to `chunk` modulo the
// chunk count. Returns counts indexed by popcount of the realized set.
void fringe_chunk(const KernelShape& shape, std::uint64_t chunk, std::vector<std::uint64_t>& by_pc) {
    const int m = shape.m;
    const int p = shape.pin;
    const int h = shape.low_bits;
    const std::uint64_t full = low_mask(m);
    const std::uint64_t outer_count = std::uint64_t{1} << (m - p);
    const std::uint64_t stride = std::uint64_t{1} << shape.chunk_bits;
    const std::size_t low_full = std::size_t{1} << h;
    const std::size_t low_count = low_full >> p;
    const std::size_t high_count = std::size_t{1} << (m - h);

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m));
    std::vector<std::uint64_t> low_all(low_full);
    std::vector<std::uint64_t> low(low_count);
    std::vector<std::uint64_t> high(high_count);
    SplitHistogram once;
    SplitHistogram twice;

    for (std::uint64_t idx = chunk; idx < outer_count; idx += stride) {
        const std::uint64_t x = (idx << p) | static_cast<std::uint64_t>(p);
        for (int y = 0; y < m; ++y) rows[static_cast<std::size_t>(y)] = (x << y) & full;

        low_all[0] = 0;
        for (std::size_t t = 1; t < low_full; ++t) {
            low_all[t] = low_all[t & (t - 1)] | rows[static_cast<std::size_t>(std::countr_zero(t))];
        }
        for (std::size_t u = 0; u < low_count; ++u) low[u] = low_all[(u << p) | static_cast<std::size_t>(p)];
        high[0] = 0;
        for (std::size_t v = 1; v < high_count; ++v) {
            high[v] = high[v & (v - 1)] |
                      rows[static_cast<std::size_t>(h + std::countr_zero(v))];
        }

        if (!shape.symmetric) {
            for (std::size_t v = 0; v < high_count; ++v) {
                scan(high[v], low.data(), 0, low_count, full, m, once);
            }
            continue;
        }
        // Inner masks y >= x only: pairs with y > x count twice, y == x once.
        const std::size_t x_high = static_cast<std::size_t>(x >> h);
        const std::size_t x_low = static_cast<std::size_t>((x & low_mask(h)) >> p);
        scan(high[x_high], low.data(), x_low, x_low + 1, full, m, once);
        scan(high[x_high], low.data(), x_low + 1, low_count, full, m, twice);
        for (std::size_t v = x_high + 1; v < high_count; ++v) {
            scan(high[v], low.data(), 0, low_count, full, m, twice);
        }
    }
    once.add_to(by_pc, 1);
    twice.add_to(by_pc, 2);
}

}  // namespace

std::uint64_t FringeCounts::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) checked_add(sum, c);
    return sum;
}

FringeCounts fringe_naive(int m, bool conditioned) {
    check_m(m, kFringeNaiveMaxM, "fringe_naive");
    const int width = 2 * m;
    const std::uint64_t ends = (std::uint64_t{1} << (width - 1)) | 1U;
    FringeCounts out{m, conditioned, std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0)};
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(width));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << width); ++s) {
        if (conditioned && (s & ends) != ends) continue;
        elems.clear();
        for (int i = 0; i < width; ++i) {
            if ((s >> i) & 1U) elems.push_back(i);
        }
        std::uint64_t present = 0;
        for (std::size_t a = 0; a < elems.size(); ++a) {
            for (std::size_t b = 0; b < a; ++b) {
                const int d = elems[a] - elems[b];
                if (d >= m) present |= std::uint64_t{1} << (d - m);
            }
        }
        ++out.counts[static_cast<std::size_t>(m - std::popcount(present))];
    }
    return out;
}

FringeCounts fringe_fast(int m, bool conditioned, const FringeOptions& options) {
    check_m(m, kFringeMaxM, "fringe_fast");
    KernelShape shape;
    shape.m = m;
    shape.pin = conditioned ? 1 : 0;
    shape.low_bits = std::clamp(options.table_bits, 1, m);
    shape.symmetric = options.use_symmetry;
    const int outer_bits = m - shape.pin;
    const int wanted = options.chunk_bits >= 0 ? options.chunk_bits : (m >= 18 ? 12 : std::min(8, m / 2));
    shape.chunk_bits = std::clamp(wanted, 0, std::min(outer_bits, 20));

    const std::size_t bins = static_cast<std::size_t>(m) + 1;
    ChunkedHistogramJob job;
    job.chunk_count = std::uint64_t{1} << shape.chunk_bits;
    job.bins = bins;
    job.kernel = [shape, bins, m](std::uint64_t chunk, std::span<std::uint64_t> hist) {
        std::vector<std::uint64_t> by_pc(bins, 0);
        fringe_chunk(shape, chunk, by_pc);
        for (std::size_t pc = 0; pc < bins; ++pc) hist[static_cast<std::size_t>(m) - pc] = by_pc[pc];
    };

    ChunkedRunOptions ro;
    ro.workers = options.workers;
    ro.checkpoint = options.checkpoint;
    ro.progress = options.progress;
    ro.chunk_budget = options.chunk_budget;
    ro.header.magic = kFringeMagic;
    ro.header.parameter = static_cast<std::uint32_t>(m);
    ro.header.flags = conditioned ? 1 : 0;
    ro.header.chunk_count = static_cast<std::uint32_t>(job.chunk_count);
    ro.header.bins = static_cast<std::uint32_t>(bins);

    return FringeCounts{m, conditioned, run_chunked_histogram(job, ro)};
}

DyadicRational fringe_prob(const FringeCounts& counts, int k) {
    if (k < 0 || k > counts.m) {
        throw std::out_of_range("fringe_prob needs 0 <= k <= m = " + std::to_string(counts.m) +
                                ", got k = " + std::to_string(k));
    }
    return DyadicRational::from_count(counts.at(k), counts.log2_denominator());
}

std::uint64_t top_differences(std::uint64_t bottom, std::uint64_t top_rebased, int m) noexcept {
    std::uint64_t present = 0;
    for (std::uint64_t rest = bottom; rest != 0; rest &= rest - 1) {
        present |= top_rebased >> std::countr_zero(rest);
    }
    return present & low_mask(m);
}

FringeCounts published_conditioned_fringe_m23() {
    const auto data = reference::conditioned_fringe_counts_m23();
    return FringeCounts{reference::kTabulatedFringeM, true,
                        std::vector<std::uint64_t>(data.begin(), data.end())};
}

}  // namespace diffset
