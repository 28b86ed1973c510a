#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace diffset {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Rounding { down, up, nearest };

/// Decimal rendering of q with `places` fractional digits. `down` and `up`
/// are directed (floor / ceiling at the last place), so a printed lower
/// endpoint never exceeds the exact value and a printed upper endpoint never
/// falls below it.
std::string format_decimal(const Rational& q, int places, Rounding rounding);

Rational pow_rational(const Rational& base, unsigned exponent);
Integer to_integer(std::uint64_t v);
Rational to_rational(std::uint64_t numerator, std::uint64_t denominator = 1);

/// Adds `delta` to `acc`, throwing std::overflow_error on wrap-around.
void checked_add(std::uint64_t& acc, std::uint64_t delta);

/// Exact nonnegative rational a / 2^e in canonical form (a odd, or a = 0 and
/// e = 0). Subtraction that would go negative throws std::domain_error.
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(Integer numerator, unsigned log2_denominator);
    static DyadicRational from_count(std::uint64_t count, unsigned log2_denominator);

    const Integer& numerator() const noexcept { return numerator_; }
    unsigned log2_denominator() const noexcept { return log2_den_; }
    bool is_zero() const noexcept { return numerator_ == 0; }

    Rational to_rational() const;
    double to_double() const;

    /// this / 2^k
    DyadicRational scaled_down(unsigned k) const;

    friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
    friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
    friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
    DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
    DyadicRational& operator-=(const DyadicRational& o) { return *this = *this - o; }

    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);
    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.log2_den_ == b.log2_den_ && a.numerator_ == b.numerator_;
    }

    std::string to_string() const;

private:
    void canonicalize();

    Integer numerator_{0};
    unsigned log2_den_ = 0;
};

}  // namespace diffset
