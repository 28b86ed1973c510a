#include "diffset/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diffset {

namespace {

constexpr int kSeparationSearchLimit = 400;

Rational three_quarters_pow(int e) { return pow_rational(Rational(3, 4), static_cast<unsigned>(e)); }

Rational power_of_two(unsigned e) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, e);
    return Rational(1, d);  // 2^-e
}

std::string pair_name(int a, int b) {
    return "l(" + std::to_string(a) + ") < l(" + std::to_string(b) + ")";
}

std::optional<int> separating_m(const LinearForm& form, const BoundsReport& report) {
    Rational mid;
    try {
        mid = evaluate_point(form, report.g);
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
    if (mid == 0) return std::nullopt;
    const Rational target = abs(mid);
    const Rational mass = coefficient_mass(form);
    for (int m = report.m + 1; m <= kSeparationSearchLimit; ++m) {
        if (mass * j_error_bound(m) < target) return m;
    }
    return std::nullopt;
}

Verdict combine(const std::vector<Comparison>& comps) {
    bool all = true;
    for (const auto& c : comps) {
        if (c.verdict == Verdict::refuted) return Verdict::refuted;
        if (c.verdict != Verdict::certified) all = false;
    }
    return all ? Verdict::certified : Verdict::inconclusive;
}

std::string failing_note(const std::vector<Comparison>& comps) {
    std::string note;
    for (const auto& c : comps) {
        if (c.verdict == Verdict::certified) continue;
        if (!note.empty()) note += "; ";
        note += pair_name(c.smaller, c.larger) + " " + std::string(to_string(c.verdict));
        if (c.separating_m) note += " (separates near m = " + std::to_string(*c.separating_m) + ")";
        if (!c.note.empty()) note += " [" + c.note + "]";
    }
    return note;
}

}  // namespace

Rational j_error_bound(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    return Rational(16, 9) * three_quarters_pow(m + 1);
}

Rational f_error_bound(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    return 4 * three_quarters_pow(m + 1);
}

PowerBound local_isolation_bound(int n, int k) {
    if (n < 2 || k < 0 || k > n - 1) {
        throw std::out_of_range("local_isolation_bound needs n >= 2 and 0 <= k <= n-1, got n = " +
                                std::to_string(n) + ", k = " + std::to_string(k));
    }
    if (k == n - 1) return PowerBound::zero();
    const Rational four_ninths(4, 9);
    if (3 * k >= 2 * n) return PowerBound(four_ninths, Rational(3, 4), n - k);
    return PowerBound(four_ninths, Rational(3, 4), n, 3);
}

Interval j_raw_interval(int k, const FringeCounts& conditioned) {
    if (!conditioned.conditioned) {
        throw std::invalid_argument("j intervals need endpoint-conditioned fringe counts");
    }
    if (k < 0 || k % 2 != 0) {
        throw std::invalid_argument("j index must be even and >= 0, got " + std::to_string(k));
    }
    if (k / 2 >= conditioned.m) {
        throw std::invalid_argument("j(" + std::to_string(k) + ") needs m > " +
                                    std::to_string(k / 2) + ", have m = " +
                                    std::to_string(conditioned.m));
    }
    const Rational g = fringe_prob(conditioned, k / 2).to_rational();
    const Rational e = j_error_bound(conditioned.m);
    return Interval(g - e, g + e);
}

ProbInterval j_interval(int k, const FringeCounts& conditioned) {
    return ProbInterval::clipped(j_raw_interval(k, conditioned));
}

JIntervals j_intervals(const FringeCounts& conditioned, bool clip) {
    JIntervals out;
    for (int k = 0; k / 2 < conditioned.m; k += 2) {
        out.emplace(k, clip ? j_interval(k, conditioned).value() : j_raw_interval(k, conditioned));
    }
    return out;
}

LinearForm ell_form(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("l index must be even and >= 0");
    LinearForm form;
    for (int i = 0; k - 2 * i >= 0; ++i) {
        form[k - 2 * i] = Rational(i + 1) * power_of_two(static_cast<unsigned>(i + 2));
    }
    return form;
}

LinearForm ell_diff_form(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("l index must be even and >= 0");
    LinearForm form;
    form[k + 2] = Rational(-1, 4);
    for (int i = 1; k - 2 * i >= 0; ++i) {
        form[k - 2 * i] = Rational(i) * power_of_two(static_cast<unsigned>(i + 3));
    }
    return form;
}

LinearForm subtract(const LinearForm& a, const LinearForm& b) {
    LinearForm out = a;
    for (const auto& [idx, c] : b) out[idx] -= c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Rational coefficient_mass(const LinearForm& form) {
    Rational sum = 0;
    for (const auto& [idx, c] : form) sum += abs(c);
    return sum;
}

Interval evaluate(const LinearForm& form, const JIntervals& j) {
    std::vector<Rational> coeffs;
    std::vector<Interval> ivs;
    for (const auto& [idx, c] : form) {
        const auto it = j.find(idx);
        if (it == j.end()) {
            throw std::out_of_range("no enclosure for j(" + std::to_string(idx) + ")");
        }
        coeffs.push_back(c);
        ivs.push_back(it->second);
    }
    return interval_combine(coeffs, ivs);
}

Rational evaluate_point(const LinearForm& form, const std::map<int, Rational>& values) {
    Rational sum = 0;
    for (const auto& [idx, c] : form) {
        const auto it = values.find(idx);
        if (it == values.end()) throw std::out_of_range("no value for j(" + std::to_string(idx) + ")");
        sum += c * it->second;
    }
    return sum;
}

ProbInterval ell_interval(int k, const JIntervals& j) {
    return ProbInterval::clipped(evaluate(ell_form(k), j));
}

Interval ell_diff_interval(int k, const JIntervals& j) { return evaluate(ell_diff_form(k), j); }

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::certified: return "certified";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::refuted: return "refuted";
    }
    return "?";
}

Comparison compare_ell(const BoundsReport& report, int smaller, int larger) {
    Comparison c;
    c.smaller = smaller;
    c.larger = larger;
    const auto a = report.ell.find(smaller);
    const auto b = report.ell.find(larger);
    if (a != report.ell.end() && b != report.ell.end()) {
        if (a->second.hi() < b->second.lo()) {
            c.verdict = Verdict::certified;
            c.method = "direct";
            c.difference = Interval(b->second.lo() - a->second.hi(), b->second.hi() - a->second.lo());
            return c;
        }
    }
    const LinearForm form = subtract(ell_form(larger), ell_form(smaller));
    c.method = "difference";
    try {
        c.difference = evaluate(form, report.j);
    } catch (const std::out_of_range& e) {
        c.verdict = Verdict::inconclusive;
        c.note = e.what();
        return c;
    }
    if (c.difference->lo > 0) {
        c.verdict = Verdict::certified;
    } else if (c.difference->hi < 0) {
        c.verdict = Verdict::refuted;
    } else {
        c.verdict = Verdict::inconclusive;
        c.separating_m = separating_m(form, report);
    }
    return c;
}

ClaimResult verify_l10_chain(const BoundsReport& report) {
    ClaimResult r;
    r.claim = "l(10) < l(8) < l(0) < l(6) < l(2) < l(4)";
    const int chain[] = {10, 8, 0, 6, 2, 4};
    for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
        r.comparisons.push_back(compare_ell(report, chain[i], chain[i + 1]));
    }
    r.verdict = combine(r.comparisons);
    r.note = failing_note(r.comparisons);
    return r;
}

ClaimResult verify_peak(const BoundsReport& report) {
    ClaimResult r;
    r.claim = "l(k) < l(4) for all k != 4";
    for (int k : {0, 2, 6, 8, 10}) r.comparisons.push_back(compare_ell(report, k, 4));
    r.tail = "analytic: for k >= 12, 2(k-6) l(k) < sum_{i>=6} (i-6) l(i) < 12 l(4)";
    r.verdict = combine(r.comparisons);
    r.note = failing_note(r.comparisons);
    return r;
}

SumIdentityResult sum_identity_check(const BoundsReport& report, int max_k,
                                     std::span<const DiffCountTable> tables) {
    SumIdentityResult r;
    r.max_k = max_k;
    LinearForm total;
    for (int k = 2; k <= max_k; k += 2) {
        for (const auto& [idx, c] : ell_form(k)) total[idx] += Rational(k) * c;
    }
    r.partial_sum = total.empty() ? Interval(0, 0) : evaluate(total, report.j);
    r.below_six = r.partial_sum.lo < 6;
    for (const auto& t : tables) {
        MeanGap gap;
        gap.n = t.n;
        gap.mean = mean_diffset_size(t);
        gap.gap = abs(gap.mean - Rational(2 * t.n - 7));
        r.mean_gaps.push_back(std::move(gap));
    }
    return r;
}

ProbInterval ruler_constant(const BoundsReport& report) {
    const auto it = report.ell.find(0);
    if (it == report.ell.end()) throw std::out_of_range("report has no l(0) enclosure");
    return ProbInterval::clipped(Interval(2 * it->second.lo(), 2 * it->second.hi()));
}

BoundsReport build_bounds_report(const FringeCounts& conditioned, const BoundsOptions& options) {
    if (!conditioned.conditioned) {
        throw std::invalid_argument("bounds need endpoint-conditioned fringe counts");
    }
    BoundsReport r;
    r.m = conditioned.m;
    r.clipped_j = options.clip_j;
    r.error = j_error_bound(conditioned.m);
    for (int k = 0; k / 2 < conditioned.m; k += 2) {
        r.g.emplace(k, fringe_prob(conditioned, k / 2).to_rational());
    }
    r.j = j_intervals(conditioned, options.clip_j);

    const int top = std::min(options.max_k, 2 * conditioned.m - 2);
    for (int k = 0; k <= top; k += 2) r.ell.emplace(k, ell_interval(k, r.j));
    for (int k = 0; k + 2 <= top; k += 2) r.diffs.emplace(k, ell_diff_interval(k, r.j));

    r.l10_chain = verify_l10_chain(r);
    r.peak = verify_peak(r);
    if (r.ell.contains(0)) r.ruler_constant = ruler_constant(r);

    std::vector<DiffCountTable> tables;
    for (int n : options.mean_ns) tables.push_back(dist_table(n, options.enumerate));
    r.sum_identity = sum_identity_check(r, std::min(options.sum_max_k, 2 * conditioned.m - 2), tables);

    // Interval-level analogue of l(2k+2) >= l(2k)/2, with slack for the two enclosures.
    int floor_violations = 0;
    for (int k = 0; k + 2 <= top; k += 2) {
        if (r.ell.at(k + 2).lo() < r.ell.at(k).lo() / 2 - 2 * r.error) ++floor_violations;
    }
    r.diagnostics.push_back("halving floor lo(l(k+2)) >= lo(l(k))/2 - 2e: " +
                            std::string(floor_violations == 0 ? "holds" : "violated") +
                            " for k <= " + std::to_string(top));

    std::vector<int> divots;
    for (int k = 2; k + 2 <= top; k += 2) {
        if (compare_ell(r, k, k - 2).verdict == Verdict::certified &&
            compare_ell(r, k, k + 2).verdict == Verdict::certified) {
            divots.push_back(k);
        }
    }
    std::string probe = "certified divots in l(0.." + std::to_string(top) + "): ";
    if (divots.empty()) {
        probe += "none";
    } else {
        for (std::size_t i = 0; i < divots.size(); ++i) probe += (i ? "," : "") + std::to_string(divots[i]);
    }
    r.diagnostics.push_back(probe);
    return r;
}

}  // namespace diffset
