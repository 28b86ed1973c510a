#include <numeric>

#include <gtest/gtest.h>

#include <diffset/fringe.hpp>
#include <diffset/subset_mask.hpp>

#include "oracles.hpp"

using namespace diffset;

TEST(FringeNaive, Examples) {
    EXPECT_EQ(fringe_naive(1, true).counts, (std::vector<std::uint64_t>{1, 0}));
    EXPECT_EQ(fringe_naive(1, false).counts, (std::vector<std::uint64_t>{1, 3}));
    const auto f2 = fringe_naive(2, false);
    EXPECT_EQ(f2.total(), 16U);
    // No difference in {2, 3}: the empty set, 4 singletons, {0,1}, {1,2}, {2,3}.
    EXPECT_EQ(f2.at(2), 8U);
    EXPECT_THROW(fringe_naive(14, false), LimitExceeded);
}

TEST(FringeNaive, MatchesSetOracle) {
    for (int m = 1; m <= 6; ++m) {
        for (bool conditioned : {false, true}) {
            EXPECT_EQ(fringe_naive(m, conditioned).counts, oracle::fringe(m, conditioned)) << m << ' ' << conditioned;
        }
    }
}

TEST(FringeFast, MatchesNaive) {
    for (int m = 1; m <= 12; ++m) {
        for (bool conditioned : {false, true}) {
            EXPECT_EQ(fringe_fast(m, conditioned), fringe_naive(m, conditioned)) << m << ' ' << conditioned;
        }
    }
}

TEST(FringeFast, KernelVariantsAgree) {
    for (int m : {5, 9, 13}) {
        for (bool conditioned : {false, true}) {
            const auto base = fringe_fast(m, conditioned);
            FringeOptions plain;
            plain.use_symmetry = false;
            EXPECT_EQ(fringe_fast(m, conditioned, plain), base) << m;
            for (int bits : {0, 3, 6}) {
                FringeOptions o;
                o.table_bits = bits;
                o.chunk_bits = bits % 5;
                EXPECT_EQ(fringe_fast(m, conditioned, o), base) << m << " table_bits=" << bits;
            }
        }
    }
}

TEST(FringeFast, ConservationAndTopAnchor) {
    for (int m = 1; m <= 15; ++m) {
        for (bool conditioned : {false, true}) {
            const auto f = fringe_fast(m, conditioned);
            EXPECT_EQ(f.total(), std::uint64_t{1} << f.log2_denominator());
            if (conditioned) EXPECT_EQ(f.at(m), 0U) << m;
            DyadicRational sum;
            for (int k = 0; k <= m; ++k) sum += fringe_prob(f, k);
            EXPECT_EQ(sum, DyadicRational::from_count(1, 0));
        }
    }
    EXPECT_THROW(fringe_fast(27, true), LimitExceeded);
    EXPECT_THROW(fringe_fast(0, true), std::invalid_argument);
}

TEST(FringeProb, Examples) {
    EXPECT_EQ(fringe_prob(fringe_naive(1, true), 0).to_rational(), 1);
    EXPECT_EQ(fringe_prob(fringe_naive(1, false), 1).to_rational(), Rational(3, 4));
    const auto pub = published_conditioned_fringe_m23();
    EXPECT_EQ(fringe_prob(pub, 0), DyadicRational::from_count(8592305829704, 44));
    EXPECT_NEAR(fringe_prob(pub, 0).to_double(), 0.48842, 5e-6);
    EXPECT_THROW(fringe_prob(pub, 24), std::out_of_range);
    EXPECT_THROW(fringe_prob(pub, -1), std::out_of_range);
}

TEST(FringeProb, PublishedCountsAreConsistent) {
    const auto pub = published_conditioned_fringe_m23();
    EXPECT_EQ(pub.m, 23);
    EXPECT_TRUE(pub.conditioned);
    EXPECT_EQ(pub.total(), std::uint64_t{1} << 44);
    EXPECT_EQ(pub.at(1), 4442759682300U);
    EXPECT_EQ(pub.at(22), 1U);
    EXPECT_EQ(pub.at(23), 0U);
}

TEST(Decomposition, TopDifferencesMatchWholeSet) {
    for (int m = 1; m <= 10; ++m) {
        const std::uint64_t half = low_mask(m);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (2 * m)); ++s) {
            const std::uint64_t whole = nonnegative_differences(s) >> m;
            ASSERT_EQ(top_differences(s & half, s >> m, m), whole & half) << m << ' ' << s;
        }
    }
}

TEST(Decomposition, ReflectionSymmetry) {
    for (int m = 1; m <= 8; ++m) {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (2 * m)); ++s) {
            const SubsetMask mask(s, 2 * m);
            ASSERT_EQ(oracle::top_realized(mask.bits(), m), oracle::top_realized(mask.reflected().bits(), m));
        }
    }
}
