#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <diffset/bounds.hpp>
#include <diffset/closedform.hpp>
#include <diffset/enumerate.hpp>
#include <diffset/fringe.hpp>
#include <diffset/reference_data.hpp>

namespace diffset::cli {

namespace {

constexpr int kGoldenMaxN = 28;

Rational missing_prob(const std::vector<DiffCountTable>& tables, int n, int j) {
    if (n < 0 || j < 0 || j > 2 * n - 1) return 0;
    return to_rational(tables[static_cast<std::size_t>(n)].at(2 * n - 1 - j)) /
           Rational(Integer(1) << n);
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
        if (r.passed) r.detail = "ok";
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(unsigned workers) {
    EnumerateOptions opts;
    opts.workers = workers;
    std::vector<DiffCountTable> tables;
    for (int n = 0; n <= kGoldenMaxN; ++n) tables.push_back(dist_table(n, opts));

    std::vector<CheckResult> out;

    out.push_back(check("golden tables n <= 28", [&] {
        for (int n = 0; n <= kGoldenMaxN; ++n) {
            const auto ref = reference::diff_counts(n);
            const auto& got = tables[static_cast<std::size_t>(n)].counts;
            if (!std::equal(got.begin(), got.end(), ref.begin(), ref.end())) {
                return "table differs at n = " + std::to_string(n);
            }
        }
        return std::string();
    }));

    out.push_back(check("totals and parity", [&] {
        for (int n = 0; n <= kGoldenMaxN; ++n) {
            const auto& t = tables[static_cast<std::size_t>(n)];
            std::uint64_t total = 0;
            for (std::size_t k = 0; k < t.counts.size(); ++k) {
                total += t.counts[k];
                if (k >= 2 && k % 2 == 0 && t.counts[k] != 0) {
                    return "nonzero even entry at n = " + std::to_string(n);
                }
            }
            if (total != (std::uint64_t{1} << n)) return "total != 2^n at n = " + std::to_string(n);
        }
        return std::string();
    }));

    out.push_back(check("closed forms for |S-S| = 3, 5, 7", [&] {
        for (int n = 0; n <= kGoldenMaxN; ++n) {
            for (int k : {3, 5, 7}) {
                if (having_formula(n, k).count != to_integer(tables[static_cast<std::size_t>(n)].at(k))) {
                    return "formula k = " + std::to_string(k) + " fails at n = " + std::to_string(n);
                }
            }
        }
        return std::string();
    }));

    out.push_back(check("divots at 5, 9, 15", [&] {
        for (int n = 4; n <= kGoldenMaxN; ++n) {
            const auto d = having_divots(tables[static_cast<std::size_t>(n)]);
            auto has = [&d](int k) { return std::find(d.begin(), d.end(), k) != d.end(); };
            if (!has(5)) return "no divot at 5 for n = " + std::to_string(n);
            if (n >= 7 && !has(9)) return "no divot at 9 for n = " + std::to_string(n);
            if (n >= 12 && !has(15)) return "no divot at 15 for n = " + std::to_string(n);
            if (n == 11 && has(15)) return std::string("unexpected divot at 15 for n = 11");
        }
        return std::string();
    }));

    out.push_back(check("recurrence 4 <= n <= 20", [&] {
        for (int n = 4; n <= 20; ++n) {
            const auto cond = cond_dist_table(n, opts);
            for (int j = 0; j <= 2 * n - 1; ++j) {
                const Rational q = to_rational(cond.at(2 * n - 1 - j)) / Rational(Integer(1) << (n - 2));
                const Rational rhs = q / 4 + missing_prob(tables, n - 1, j - 2) -
                                     missing_prob(tables, n - 2, j - 4) / 4;
                if (missing_prob(tables, n, j) != rhs) {
                    return "fails at n = " + std::to_string(n) + ", j = " + std::to_string(j);
                }
            }
        }
        return std::string();
    }));

    out.push_back(check("halving n <= 24", [&] {
        for (int n = 1; n <= 24; ++n) {
            for (int k = 0; 2 * k + 2 <= 2 * n - 1; ++k) {
                if (missing_prob(tables, n, 2 * k + 2) < missing_prob(tables, n - 1, 2 * k) / 2) {
                    return "fails at n = " + std::to_string(n) + ", k = " + std::to_string(k);
                }
            }
        }
        return std::string();
    }));

    out.push_back(check("peak at 4 missing", [&] {
        if (argmax_missing(tables[14]) != std::vector<int>{2, 4}) return std::string("n = 14 is not the tie {2, 4}");
        for (int n = 15; n <= kGoldenMaxN; ++n) {
            if (argmax_missing(tables[static_cast<std::size_t>(n)]) != std::vector<int>{4}) {
                return "argmax != {4} at n = " + std::to_string(n);
            }
        }
        return std::string();
    }));

    out.push_back(check("mean gap nonincreasing 15 <= n <= 28", [&] {
        Rational prev = -1;
        for (int n = 15; n <= kGoldenMaxN; ++n) {
            Rational gap = mean_diffset_size(tables[static_cast<std::size_t>(n)]) - (2 * n - 7);
            if (gap < 0) gap = -gap;
            if (prev >= 0 && gap > prev) return "gap grows at n = " + std::to_string(n);
            prev = gap;
        }
        return std::string();
    }));

    out.push_back(check("fringe kernel = oracle m <= 10", [&] {
        FringeOptions fo;
        fo.workers = workers;
        for (int m = 1; m <= 10; ++m) {
            for (bool conditioned : {false, true}) {
                if (!(fringe_fast(m, conditioned, fo) == fringe_naive(m, conditioned))) {
                    return "mismatch at m = " + std::to_string(m);
                }
            }
        }
        return std::string();
    }));

    out.push_back(check("m = 23 chain from published counts", [&] {
        const auto report = build_bounds_report(published_conditioned_fringe_m23());
        std::ostringstream os;
        if (report.l10_chain.verdict != Verdict::certified) os << "l10 chain " << to_string(report.l10_chain.verdict);
        if (report.peak.verdict != Verdict::certified) os << " peak " << to_string(report.peak.verdict);
        return os.str();
    }));

    return out;
}

}  // namespace diffset::cli
