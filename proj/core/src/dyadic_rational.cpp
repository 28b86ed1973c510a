#include "diffset/rational.hpp"

#include <stdexcept>

namespace diffset {

namespace {

Integer shifted(const Integer& v, unsigned k) {
    Integer out;
    mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), k);
    return out;
}

}  // namespace

std::string format_decimal(const Rational& q, int places, Rounding rounding) {
    if (places < 0) throw std::invalid_argument("negative decimal places");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Rational scaled = q * scale;
    Integer digits;
    switch (rounding) {
        case Rounding::down:
            mpz_fdiv_q(digits.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            break;
        case Rounding::up:
            mpz_cdiv_q(digits.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            break;
        case Rounding::nearest: {
            Rational shifted_half = scaled + Rational(1, 2);
            mpz_fdiv_q(digits.get_mpz_t(), shifted_half.get_num_mpz_t(),
                       shifted_half.get_den_mpz_t());
            break;
        }
    }
    const bool negative = digits < 0;
    Integer magnitude = negative ? Integer(-digits) : digits;
    std::string s = magnitude.get_str();
    if (places > 0) {
        if (s.size() <= static_cast<std::size_t>(places)) {
            s.insert(0, static_cast<std::size_t>(places) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(places), ".");
    }
    return negative ? "-" + s : s;
}

Rational pow_rational(const Rational& base, unsigned exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

Integer to_integer(std::uint64_t v) {
    Integer out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

Rational to_rational(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    Rational q(to_integer(numerator), to_integer(denominator));
    q.canonicalize();
    return q;
}

void checked_add(std::uint64_t& acc, std::uint64_t delta) {
    if (__builtin_add_overflow(acc, delta, &acc)) {
        throw std::overflow_error("64-bit count overflow");
    }
}

DyadicRational::DyadicRational(Integer numerator, unsigned log2_denominator)
    : numerator_(std::move(numerator)), log2_den_(log2_denominator) {
    if (numerator_ < 0) throw std::domain_error("dyadic rational must be nonnegative");
    canonicalize();
}

DyadicRational DyadicRational::from_count(std::uint64_t count, unsigned log2_denominator) {
    return DyadicRational(to_integer(count), log2_denominator);
}

void DyadicRational::canonicalize() {
    if (numerator_ == 0) {
        log2_den_ = 0;
        return;
    }
    const auto twos = static_cast<unsigned>(mpz_scan1(numerator_.get_mpz_t(), 0));
    const unsigned k = twos < log2_den_ ? twos : log2_den_;
    if (k > 0) {
        mpz_fdiv_q_2exp(numerator_.get_mpz_t(), numerator_.get_mpz_t(), k);
        log2_den_ -= k;
    }
}

Rational DyadicRational::to_rational() const {
    Rational q(numerator_, shifted(Integer(1), log2_den_));
    q.canonicalize();
    return q;
}

double DyadicRational::to_double() const { return to_rational().get_d(); }

DyadicRational DyadicRational::scaled_down(unsigned k) const {
    return DyadicRational(numerator_, log2_den_ + k);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    const unsigned e = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    return DyadicRational(shifted(a.numerator_, e - a.log2_den_) +
                              shifted(b.numerator_, e - b.log2_den_),
                          e);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    const unsigned e = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    Integer diff = shifted(a.numerator_, e - a.log2_den_) - shifted(b.numerator_, e - b.log2_den_);
    if (diff < 0) throw std::domain_error("dyadic subtraction would be negative");
    return DyadicRational(std::move(diff), e);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
    return DyadicRational(a.numerator_ * b.numerator_, a.log2_den_ + b.log2_den_);
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    const unsigned e = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    const int c = cmp(shifted(a.numerator_, e - a.log2_den_), shifted(b.numerator_, e - b.log2_den_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string DyadicRational::to_string() const {
    return numerator_.get_str() + "/2^" + std::to_string(log2_den_);
}

}  // namespace diffset
