#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mhsum {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always held in canonical reduced form with a
/// positive denominator, so equality is structural.
///
/// Text form is "p/q" with the sign on the numerator and "/q" omitted when
/// q == 1, e.g. "-3/7", "5", "0".
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}              // NOLINT(implicit)
    Rational(int value) : value_(value) {}               // NOLINT(implicit)
    Rational(unsigned long value) : value_(value) {}     // NOLINT(implicit)
    Rational(unsigned int value) : value_(value) {}      // NOLINT(implicit)
    Rational(const Integer& value) : value_(value) {}    // NOLINT(implicit)
    Rational(long numerator, long denominator);
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "p" or "p/q" (q > 0, optional leading sign on p). Non-reduced
    /// input such as "2/4" is accepted and canonicalized.
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

/// x^k with the convention 0^0 = 1.
Rational pow(const Rational& base, std::uint64_t exponent);

}  // namespace mhsum
