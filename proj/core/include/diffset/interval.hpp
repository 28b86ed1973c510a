#pragma once

#include <span>
#include <string>

#include "diffset/rational.hpp"

namespace diffset {

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational lo_, Rational hi_);
    static Interval point(const Rational& v) { return Interval(v, v); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Interval widened(const Rational& slack) const { return Interval(lo - slack, hi + slack); }

    /// "[lo, hi]" with lo rounded down and hi rounded up at `places` digits.
    std::string to_string(int places = 6) const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// An enclosure of a probability: 0 <= lo <= hi <= 1.
class ProbInterval {
public:
    ProbInterval() : value_(0, 1) {}
    /// Throws std::invalid_argument unless 0 <= lo <= hi <= 1.
    explicit ProbInterval(Interval value);
    /// Intersects with [0, 1]; throws std::domain_error if that is empty.
    static ProbInterval clipped(const Interval& value);

    const Interval& value() const noexcept { return value_; }
    const Rational& lo() const noexcept { return value_.lo; }
    const Rational& hi() const noexcept { return value_.hi; }
    operator const Interval&() const noexcept { return value_; }

    friend bool operator==(const ProbInterval&, const ProbInterval&) = default;

private:
    Interval value_;
};

/// sum_i coeffs[i] * intervals[i], exact. Negative coefficients swap the
/// endpoints they pick. Throws std::invalid_argument on a length mismatch.
Interval interval_combine(std::span<const Rational> coeffs, std::span<const Interval> intervals);

}  // namespace diffset
