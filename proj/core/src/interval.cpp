#include "diffset/interval.hpp"

#include <stdexcept>

namespace diffset {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

std::string Interval::to_string(int places) const {
    return "[" + format_decimal(lo, places, Rounding::down) + ", " +
           format_decimal(hi, places, Rounding::up) + "]";
}

ProbInterval::ProbInterval(Interval value) : value_(std::move(value)) {
    if (value_.lo < 0 || value_.hi > 1) {
        throw std::invalid_argument("probability interval outside [0, 1]");
    }
}

ProbInterval ProbInterval::clipped(const Interval& value) {
    Rational lo = value.lo < 0 ? Rational(0) : value.lo;
    Rational hi = value.hi > 1 ? Rational(1) : value.hi;
    if (hi < lo) throw std::domain_error("interval does not meet [0, 1]");
    return ProbInterval(Interval(std::move(lo), std::move(hi)));
}

Interval interval_combine(std::span<const Rational> coeffs, std::span<const Interval> intervals) {
    if (coeffs.size() != intervals.size()) {
        throw std::invalid_argument("interval_combine: " + std::to_string(coeffs.size()) +
                                    " coefficients for " + std::to_string(intervals.size()) +
                                    " intervals");
    }
    Rational lo = 0;
    Rational hi = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c >= 0) {
            lo += c * intervals[i].lo;
            hi += c * intervals[i].hi;
        } else {
            lo += c * intervals[i].hi;
            hi += c * intervals[i].lo;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace diffset
