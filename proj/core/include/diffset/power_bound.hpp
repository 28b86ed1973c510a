#pragma once

#include <optional>
#include <string>

#include "diffset/rational.hpp"

namespace diffset {

/// The exact real number coefficient * base^(p/q) with coefficient >= 0,
/// base > 0 and q > 0. Fractional exponents such as (3/4)^(n/3) stay exact:
/// comparisons against rationals raise both sides to the q-th power.
class PowerBound {
public:
    PowerBound(Rational coefficient, Rational base, long exponent_num, long exponent_den = 1);
    static PowerBound zero();

    const Rational& coefficient() const noexcept { return coefficient_; }
    const Rational& base() const noexcept { return base_; }
    long exponent_num() const noexcept { return num_; }
    long exponent_den() const noexcept { return den_; }

    /// The value as a rational when the exponent is an integer.
    std::optional<Rational> as_rational() const;
    double approx() const;

    /// p <= value, decided exactly.
    bool admits(const Rational& p) const;
    /// p == value, decided exactly.
    bool equals(const Rational& p) const;

    std::string to_string() const;

    friend bool operator==(const PowerBound&, const PowerBound&) = default;

private:
    int compare_to(const Rational& p) const;  // sign(p - value)

    Rational coefficient_;
    Rational base_;
    long num_;
    long den_;
};

}  // namespace diffset
