#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diffset/enumerate.hpp"
#include "diffset/fringe.hpp"
#include "diffset/interval.hpp"
#include "diffset/power_bound.hpp"
#include "diffset/rational.hpp"

namespace diffset {

/// |j(2k) - g_k(m)| < (16/9)(3/4)^(m+1) for every k < m.
Rational j_error_bound(int m);
/// |l(2k) - f_k(m)| <= 4(3/4)^(m+1) for every k < m.
Rational f_error_bound(int m);

/// P(k not in S-S | 0, n-1 in S): 0 at k = n-1, exactly (4/9)(3/4)^(n-k)
/// for 2n/3 <= k < n-1, at most (4/9)(3/4)^(n/3) below that. The last case
/// is exceeded at odd n <= 11, k = (n-1)/2; exhaustive checks find no other
/// violation for n <= 22.
PowerBound local_isolation_bound(int n, int k);

/// Even index -> enclosure of j(index).
using JIntervals = std::map<int, Interval>;

/// g_{k/2}(m) +- j_error_bound(m), not clipped. Needs conditioned counts,
/// even k and k/2 < m; std::invalid_argument otherwise.
Interval j_raw_interval(int k, const FringeCounts& conditioned);
/// j_raw_interval clipped to [0, 1].
ProbInterval j_interval(int k, const FringeCounts& conditioned);
/// Every available index 0, 2, ..., 2m-2.
JIntervals j_intervals(const FringeCounts& conditioned, bool clip = true);

/// Coefficients over j indices.
using LinearForm = std::map<int, Rational>;

/// l(k) = sum_{i >= 0} (i+1)/2^(i+2) j(k-2i)   (terms with k-2i < 0 vanish)
LinearForm ell_form(int k);
/// l(k) - l(k+2) = -j(k+2)/4 + sum_{i >= 1} i/2^(i+3) j(k-2i)
LinearForm ell_diff_form(int k);
LinearForm subtract(const LinearForm& a, const LinearForm& b);
Rational coefficient_mass(const LinearForm& form);  // sum of |coefficients|

/// Enclosure of the form; std::out_of_range names the first missing index.
Interval evaluate(const LinearForm& form, const JIntervals& j);
Rational evaluate_point(const LinearForm& form, const std::map<int, Rational>& values);

ProbInterval ell_interval(int k, const JIntervals& j);
Interval ell_diff_interval(int k, const JIntervals& j);

enum class Verdict { certified, inconclusive, refuted };
std::string_view to_string(Verdict v);

/// The claim l(smaller) < l(larger).
struct Comparison {
    int smaller = 0;
    int larger = 0;
    Verdict verdict = Verdict::inconclusive;
    /// "direct" (disjoint l intervals) or "difference" (enclosure of l(larger) - l(smaller)).
    std::string method;
    std::optional<Interval> difference;
    /// Smallest m whose error bound would separate the pair at the current midpoints.
    std::optional<int> separating_m;
    std::string note;
};

struct ClaimResult {
    std::string claim;
    Verdict verdict = Verdict::inconclusive;
    std::vector<Comparison> comparisons;
    std::string tail;  // how indices beyond the checked ones are discharged, if any
    std::string note;
};

struct MeanGap {
    int n = 0;
    Rational mean;
    Rational gap;  // |mean - (2n - 7)|
};

struct SumIdentityResult {
    int max_k = 0;
    Interval partial_sum;  // sum_{even k <= max_k} k l(k)
    bool below_six = false;
    std::vector<MeanGap> mean_gaps;
};

struct BoundsReport {
    int m = 0;
    bool clipped_j = true;
    Rational error;                  // j_error_bound(m)
    std::map<int, Rational> g;       // j index -> g_{index/2}(m)
    JIntervals j;
    std::map<int, ProbInterval> ell;
    std::map<int, Interval> diffs;   // k -> l(k) - l(k+2)
    ClaimResult l10_chain;
    ClaimResult peak;
    std::optional<ProbInterval> ruler_constant;
    SumIdentityResult sum_identity;
    std::vector<std::string> diagnostics;

    bool all_certified() const {
        return l10_chain.verdict == Verdict::certified && peak.verdict == Verdict::certified;
    }
};

struct BoundsOptions {
    /// Largest k listed in the l and difference tables (capped at 2m-2).
    int max_k = 30;
    bool clip_j = true;
    /// Largest k of the partial sum sum k l(k).
    int sum_max_k = 20;
    /// Exhaustive sizes n whose mean |S-S| is compared with 2n-7.
    std::vector<int> mean_ns;
    EnumerateOptions enumerate;
};

BoundsReport build_bounds_report(const FringeCounts& conditioned, const BoundsOptions& options = {});

Comparison compare_ell(const BoundsReport& report, int smaller, int larger);
/// l(10) < l(8) < l(0) < l(6) < l(2) < l(4)
ClaimResult verify_l10_chain(const BoundsReport& report);
/// l(k) < l(4) for k in {0, 2, 6, 8, 10}; k >= 12 is analytic:
/// 2(k-6) l(k) < sum_{i>=6} (i-6) l(i) < 12 l(4).
ClaimResult verify_peak(const BoundsReport& report);
SumIdentityResult sum_identity_check(const BoundsReport& report, int max_k,
                                     std::span<const DiffCountTable> tables = {});
/// c = 2 l(0); std::out_of_range if l(0) is not in the report.
ProbInterval ruler_constant(const BoundsReport& report);

}  // namespace diffset
