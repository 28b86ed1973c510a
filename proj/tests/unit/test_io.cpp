#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <diffset/io.hpp>

using namespace diffset;
using nlohmann::json;

TEST(DistCsv, RoundTrip) {
    for (int n : {0, 1, 5, 17}) {
        const auto t = dist_table(n);
        EXPECT_EQ(io::parse_dist_csv(io::dist_csv(t)), t) << n;
    }
}

TEST(DistCsv, OnlyNonzeroRows) {
    const auto csv = io::dist_csv(dist_table(4));
    EXPECT_EQ(csv, "n,k,count\n4,0,1\n4,1,4\n4,3,6\n4,5,2\n4,7,3\n");
}

TEST(DistCsv, RejectsMalformedInput) {
    EXPECT_THROW(io::parse_dist_csv(""), std::invalid_argument);
    EXPECT_THROW(io::parse_dist_csv("n,k,c\n1,0,1\n"), std::invalid_argument);
    EXPECT_THROW(io::parse_dist_csv("n,k,count\n1,0,x\n"), std::invalid_argument);
    EXPECT_THROW(io::parse_dist_csv("n,k,count\n1,5,1\n"), std::invalid_argument);
    EXPECT_THROW(io::parse_dist_csv("n,k,count\n1,0,1\n2,0,1\n"), std::invalid_argument);
    EXPECT_NO_THROW(io::parse_dist_csv("n,k,count\r\n2,0,1\r\n"));
}

TEST(DistJson, Metadata) {
    const auto j = json::parse(io::dist_json(dist_table(6), io::RunMetadata{1.5, 3}));
    EXPECT_EQ(j["n"], 6);
    EXPECT_EQ(j["workers"], 3);
    EXPECT_EQ(j["elapsed_seconds"], 1.5);
    EXPECT_EQ(j["total"], 64);
    EXPECT_FALSE(j["conditioned"].get<bool>());
    EXPECT_EQ(j["counts"][0], json::array({0, 1}));
    const auto c = json::parse(io::dist_json(cond_dist_table(6), io::RunMetadata{}));
    EXPECT_TRUE(c["conditioned"].get<bool>());
    EXPECT_EQ(c["total"], 16);
}

TEST(FringeCsv, RoundTripAndValidation) {
    for (int m : {1, 4, 9}) {
        for (bool conditioned : {false, true}) {
            const auto f = fringe_fast(m, conditioned);
            EXPECT_EQ(io::parse_fringe_csv(io::fringe_csv(f)), f);
        }
    }
    const auto text = io::fringe_csv(fringe_fast(3, true));
    EXPECT_EQ(text.substr(0, text.find('\n')), "m,conditioned,k,count,denominator_log4");
    std::string bad_total = text;
    bad_total.replace(bad_total.find("3,1,0,"), 7, "3,1,0,9");
    EXPECT_THROW(io::parse_fringe_csv(bad_total), std::invalid_argument);
    EXPECT_THROW(io::parse_fringe_csv("m,conditioned,k,count,denominator_log4\n3,1,0,16,3\n"),
                 std::invalid_argument);
}

TEST(FringeCsv, FixtureMatchesEmbeddedCounts) {
    std::ifstream in(std::string(DIFFSET_FIXTURE_DIR) + "/conditioned_fringe_m23.csv");
    ASSERT_TRUE(in);
    std::ostringstream os;
    os << in.rdbuf();
    EXPECT_EQ(io::parse_fringe_csv(os.str()), published_conditioned_fringe_m23());
}

TEST(SampleOutput, Schema) {
    const auto h = sample_missing(12, 500, 2, 1);
    const auto csv = io::sample_csv(h);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,trials,seed,generator,missing,count");
    EXPECT_NE(csv.find(std::string(",") + kSampleGenerator + ","), std::string::npos);
    const auto j = json::parse(io::sample_json(h, {}));
    EXPECT_EQ(j["generator"], kSampleGenerator);
    std::uint64_t total = 0;
    for (const auto& row : j["counts"]) total += row[1].get<std::uint64_t>();
    EXPECT_EQ(total, 500U);
}

TEST(BoundsJson, ExactEndpoints) {
    const auto r = build_bounds_report(published_conditioned_fringe_m23());
    const auto j = json::parse(io::bounds_json(r));
    EXPECT_EQ(j["m"], 23);
    EXPECT_EQ(j["verdicts"]["l10_chain"]["verdict"], "certified");
    EXPECT_EQ(j["verdicts"]["peak"]["verdict"], "certified");
    for (const auto& row : j["ell"]) {
        const int k = row[0];
        const auto& lo = row[1];
        const Rational exact_lo(Integer(lo["num"].get<std::string>()), Integer(lo["den"].get<std::string>()));
        EXPECT_EQ(exact_lo, r.ell.at(k).lo());
        EXPECT_EQ(lo["decimal"], format_decimal(exact_lo, 6, Rounding::down));
    }
    EXPECT_EQ(j["j"].size(), r.j.size());
    EXPECT_EQ(j["diffs"].size(), r.diffs.size());
    EXPECT_EQ(j["ruler_constant"][0]["decimal"], "0.243316");
    EXPECT_EQ(j["ruler_constant"][1]["decimal"], "0.245100");
    // Identical inputs give identical bytes.
    EXPECT_EQ(io::bounds_json(r), io::bounds_json(build_bounds_report(published_conditioned_fringe_m23())));
}

TEST(BoundsCsv, Rows) {
    const auto r = build_bounds_report(published_conditioned_fringe_m23());
    const auto csv = io::bounds_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "kind,k,lo,hi,lo_num,lo_den,hi_num,hi_den");
    EXPECT_NE(csv.find("\nell,0,0.121658,0.122550,"), std::string::npos);
    EXPECT_NE(csv.find("\nruler_constant,0,0.243316,0.245100,"), std::string::npos);
}
