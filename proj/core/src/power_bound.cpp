#include "diffset/power_bound.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace diffset {

namespace {

Rational pow_signed(const Rational& base, long exponent) {
    if (exponent >= 0) return pow_rational(base, static_cast<unsigned>(exponent));
    return 1 / pow_rational(base, static_cast<unsigned>(-exponent));
}

}  // namespace

PowerBound::PowerBound(Rational coefficient, Rational base, long exponent_num, long exponent_den)
    : coefficient_(std::move(coefficient)), base_(std::move(base)), num_(exponent_num),
      den_(exponent_den) {
    if (coefficient_ < 0) throw std::invalid_argument("power bound coefficient must be >= 0");
    if (base_ <= 0) throw std::invalid_argument("power bound base must be > 0");
    if (den_ <= 0) throw std::invalid_argument("power bound exponent denominator must be > 0");
    const long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (coefficient_ == 0) {
        base_ = 1;
        num_ = 0;
        den_ = 1;
    }
}

PowerBound PowerBound::zero() { return PowerBound(0, 1, 0, 1); }

std::optional<Rational> PowerBound::as_rational() const {
    if (den_ != 1) return std::nullopt;
    return coefficient_ * pow_signed(base_, num_);
}

double PowerBound::approx() const {
    return coefficient_.get_d() *
           std::pow(base_.get_d(), static_cast<double>(num_) / static_cast<double>(den_));
}

int PowerBound::compare_to(const Rational& p) const {
    if (coefficient_ == 0) return sgn(p);
    if (p <= 0) return -1;
    // p ? c * b^(a/q)  <=>  (p/c)^q ? b^a, both sides positive.
    const Rational lhs = pow_rational(p / coefficient_, static_cast<unsigned>(den_));
    const Rational rhs = pow_signed(base_, num_);
    return cmp(lhs, rhs);
}

bool PowerBound::admits(const Rational& p) const { return compare_to(p) <= 0; }

bool PowerBound::equals(const Rational& p) const { return compare_to(p) == 0; }

std::string PowerBound::to_string() const {
    if (coefficient_ == 0) return "0";
    std::string s = coefficient_.get_str() + "*(" + base_.get_str() + ")^";
    if (den_ == 1) return s + std::to_string(num_);
    return s + "(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

}  // namespace diffset
