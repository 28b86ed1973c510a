#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include <diffset/enumerate.hpp>
#include <diffset/reference_data.hpp>

#include "oracles.hpp"

using namespace diffset;

namespace {

Rational prob_missing(const DiffCountTable& t, int j) {
    if (j < 0 || j > 2 * t.n - 1) return 0;
    return to_rational(t.at(2 * t.n - 1 - j)) / Rational(Integer(1) << t.n);
}

}  // namespace

TEST(DistTable, MatchesBruteForce) {
    for (int n = 0; n <= 14; ++n) EXPECT_EQ(dist_table(n).counts, oracle::dist(n)) << "n=" << n;
}

TEST(DistTable, MatchesEmbeddedGoldenData) {
    for (int n = 0; n <= 24; ++n) {
        const auto ref = reference::diff_counts(n);
        const auto t = dist_table(n);
        EXPECT_TRUE(std::equal(t.counts.begin(), t.counts.end(), ref.begin(), ref.end())) << "n=" << n;
    }
}

TEST(DistTable, Examples) {
    const auto t4 = dist_table(4);
    EXPECT_EQ(t4.at(3), 6U);
    EXPECT_EQ(t4.at(5), 2U);
    EXPECT_EQ(t4.at(7), 3U);
    const auto t0 = dist_table(0);
    EXPECT_EQ(t0.counts, std::vector<std::uint64_t>{1});
    EXPECT_EQ(dist_table(24).at(47), 2014992U);
}

TEST(DistTable, Limits) {
    EXPECT_THROW(dist_table(-1), std::invalid_argument);
    EXPECT_THROW(dist_table(31), LimitExceeded);
    EnumerateOptions o;
    o.long_run = true;
    EXPECT_THROW(dist_table(37, o), LimitExceeded);
    o.long_run = false;
    o.exhaustive_limit = 10;
    EXPECT_THROW(dist_table(11, o), LimitExceeded);
    EXPECT_THROW(cond_dist_table(1), std::invalid_argument);
}

TEST(DistTable, ChunkBitsDoNotMatter) {
    const auto base = dist_table(16);
    for (int bits : {0, 1, 4, 12}) {
        EnumerateOptions o;
        o.chunk_bits = bits;
        EXPECT_EQ(dist_table(16, o), base) << "chunk_bits=" << bits;
    }
}

TEST(DistTable, TotalsAndParity) {
    for (int n = 0; n <= 22; ++n) {
        const auto t = dist_table(n);
        EXPECT_EQ(std::accumulate(t.counts.begin(), t.counts.end(), std::uint64_t{0}), std::uint64_t{1} << n);
        for (std::size_t k = 2; k < t.counts.size(); k += 2) ASSERT_EQ(t.counts[k], 0U) << n << ' ' << k;
    }
}

TEST(CondDistTable, MatchesBruteForce) {
    for (int n = 2; n <= 14; ++n) EXPECT_EQ(cond_dist_table(n).counts, oracle::cond_dist(n)) << "n=" << n;
}

TEST(CondDistTable, Examples) {
    EXPECT_EQ(cond_dist_table(2).at(3), 1U);
    const auto t3 = cond_dist_table(3);
    EXPECT_EQ(t3.at(5), 1U);
    EXPECT_EQ(t3.at(3), 1U);
    for (int n = 2; n <= 20; ++n) {
        const auto t = cond_dist_table(n);
        EXPECT_EQ(std::accumulate(t.counts.begin(), t.counts.end(), std::uint64_t{0}), std::uint64_t{1} << (n - 2));
        EXPECT_EQ(t.at(0) + t.at(1) + t.at(2), 0U);
    }
}

TEST(Recurrence, HoldsExactly) {
    std::vector<DiffCountTable> t;
    for (int n = 0; n <= 20; ++n) t.push_back(dist_table(n));
    for (int n = 4; n <= 20; ++n) {
        const auto q = missing_distribution(cond_dist_table(n));
        for (int j = 0; j <= 2 * n - 1; ++j) {
            const Rational lhs = prob_missing(t[static_cast<std::size_t>(n)], j);
            const Rational rhs = q.at(j).to_rational() / 4 + prob_missing(t[static_cast<std::size_t>(n - 1)], j - 2) -
                                 prob_missing(t[static_cast<std::size_t>(n - 2)], j - 4) / 4;
            ASSERT_EQ(lhs, rhs) << "n=" << n << " j=" << j;
        }
    }
}

TEST(Halving, HoldsExactly) {
    DiffCountTable prev = dist_table(1);
    for (int n = 2; n <= 24; ++n) {
        const auto cur = dist_table(n);
        for (int k = 0; 2 * k + 2 <= 2 * n - 1; ++k) {
            ASSERT_GE(prob_missing(cur, 2 * k + 2), prob_missing(prev, 2 * k) / 2) << "n=" << n << " k=" << k;
        }
        prev = cur;
    }
}

TEST(MissingDistribution, Examples) {
    const auto p1 = missing_distribution(dist_table(1));
    EXPECT_EQ(p1.at(0).to_rational(), Rational(1, 2));
    EXPECT_EQ(p1.at(1).to_rational(), Rational(1, 2));

    // The n = 36 column is checked through the embedded table rather than recomputed.
    DiffCountTable t36{36, std::vector<std::uint64_t>(reference::diff_counts(36).begin(), reference::diff_counts(36).end())};
    const auto p36 = missing_distribution(t36);
    EXPECT_EQ(p36.at(0), DyadicRational::from_count(8342197304, 36));
    EXPECT_EQ(p36.at(4), DyadicRational::from_count(12894355828, 36));
    EXPECT_NEAR(p36.at(0).to_double(), 0.1214, 5e-5);
    EXPECT_NEAR(p36.at(4).to_double(), 0.1876, 5e-5);
    EXPECT_EQ(argmax_missing(t36), std::vector<int>{4});

    for (int n = 1; n <= 16; ++n) {
        DyadicRational total;
        for (const auto& [j, p] : missing_distribution(dist_table(n))) total += p;
        EXPECT_EQ(total, DyadicRational::from_count(1, 0));
    }
}

TEST(ArgmaxMissing, TiesAndPeaks) {
    // n = 1: S = {0} and the empty set each have probability 1/2.
    EXPECT_EQ(argmax_missing(dist_table(1)), (std::vector<int>{0, 1}));
    for (int n : {3, 11, 12, 14}) EXPECT_EQ(argmax_missing(dist_table(n)), (std::vector<int>{2, 4})) << n;
    for (int n = 15; n <= 22; ++n) EXPECT_EQ(argmax_missing(dist_table(n)), std::vector<int>{4}) << n;
}

TEST(MeanDiffsetSize, MatchesBruteForce) {
    EXPECT_EQ(mean_diffset_size(dist_table(1)), Rational(1, 2));
    EXPECT_EQ(mean_diffset_size(dist_table(2)), Rational(5, 4));
    for (int n = 0; n <= 12; ++n) {
        Integer sum = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) sum += oracle::diffset_size(s);
        EXPECT_EQ(mean_diffset_size(dist_table(n)), Rational(sum, Integer(1) << n)) << n;
    }
}

TEST(CompleteRulers, MatchBruteForce) {
    EXPECT_EQ(complete_ruler_count(0), 1U);
    EXPECT_EQ(complete_ruler_count(5), 9U);
    for (int length = 0; length <= 12; ++length) {
        std::uint64_t count = 0;
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << (length + 1)); ++r) {
            const auto d = oracle::differences(oracle::members(r));
            bool complete = true;
            for (int x = 0; x <= length && complete; ++x) complete = d.count(x) != 0;
            count += complete ? 1 : 0;
        }
        EXPECT_EQ(complete_ruler_count(length), count) << length;
    }
    EXPECT_EQ(complete_ruler_count(24), 4035985U);
}

TEST(AbsenceCounts, MatchBruteForce) {
    for (int n = 2; n <= 12; ++n) {
        for (bool conditioned : {false, true}) {
            const auto a = absence_counts(n, conditioned);
            std::vector<std::uint64_t> expect(static_cast<std::size_t>(n), 0);
            std::uint64_t population = 0;
            const std::uint64_t ends = 1U | (std::uint64_t{1} << (n - 1));
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                if (conditioned && (s & ends) != ends) continue;
                ++population;
                const auto d = oracle::differences(oracle::members(s));
                for (int k = 0; k < n; ++k) expect[static_cast<std::size_t>(k)] += d.count(k) ? 0 : 1;
            }
            EXPECT_EQ(a.population, population);
            EXPECT_EQ(a.absent, expect) << n << ' ' << conditioned;
        }
    }
}

TEST(MissingComplementBound, ExamplesAndRange) {
    EXPECT_TRUE(missing_complement_bound(9, 8).equals(Rational(3, 4)));
    EXPECT_TRUE(missing_complement_bound(12, 4).equals(pow_rational(Rational(3, 4), 4)));
    EXPECT_THROW(missing_complement_bound(9, 0), std::out_of_range);
    EXPECT_THROW(missing_complement_bound(9, 9), std::out_of_range);
}

TEST(MissingComplementBound, HoldsExhaustively) {
    for (int n = 2; n <= 14; ++n) {
        const auto a = absence_counts(n, false);
        for (int k = 1; k <= n - 1; ++k) {
            const Rational p = to_rational(a.absent[static_cast<std::size_t>(k)], a.population);
            EXPECT_TRUE(missing_complement_bound(n, k).admits(p)) << n << ' ' << k;
        }
    }
}

TEST(Sampling, DeterministicAndWorkerIndependent) {
    const auto a = sample_missing(40, 20000, 9, 1);
    const auto b = sample_missing(40, 20000, 9, 3);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.generator, kSampleGenerator);
    EXPECT_EQ(std::accumulate(a.counts.begin(), a.counts.end(), std::uint64_t{0}), 20000U);
    EXPECT_NE(sample_missing(40, 20000, 10, 1), a);
}

TEST(Sampling, TrivialSize) {
    const auto h = sample_missing(1, 100, 1, 1);
    ASSERT_EQ(h.counts.size(), 2U);
    EXPECT_EQ(h.counts[0] + h.counts[1], 100U);
    EXPECT_GT(h.counts[0], 0U);
    EXPECT_GT(h.counts[1], 0U);
}

TEST(Sampling, AgreesWithExactDistribution) {
    const int n = 10;
    const std::uint64_t trials = 200000;
    const auto h = sample_missing(n, trials, 3, 1);
    const auto exact = missing_distribution(dist_table(n));
    for (const auto& [j, p] : exact) {
        const double mean = p.to_double() * static_cast<double>(trials);
        const double sigma = std::sqrt(mean * (1 - p.to_double())) + 1;
        EXPECT_NEAR(static_cast<double>(h.counts[static_cast<std::size_t>(j)]), mean, 6 * sigma) << j;
    }
}

TEST(Sampling, WideSetsMissEvenCounts) {
    // n > 64 takes the multi-word path; missing counts stay even and bounded.
    const auto h = sample_missing(130, 3000, 4, 1);
    for (std::size_t j = 0; j < h.counts.size(); ++j) {
        if (j % 2 == 1) EXPECT_EQ(h.counts[j], 0U);
    }
    EXPECT_EQ(argmax_missing(h).size(), 1U);
}
