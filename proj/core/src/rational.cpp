#include "mhsum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mhsum {

namespace {

bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!is_digit_run(digits))
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return Integer(buf, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));

    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    // Sign belongs on the numerator only.
    if (!is_digit_run(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num, text), d);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) {
    Rational out;
    out.value_ = -x.value_;
    return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational pow(const Rational& base, std::uint64_t exponent) {
    if (exponent == 0) return Rational(1);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

}  // namespace mhsum
