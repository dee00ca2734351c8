#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mhsum/rational.hpp"
#include "mhsum/sequence.hpp"

namespace mhsum {

using Exponent = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponent& e);

/// Graded order: lower total degree first, then lexicographically larger
/// exponent vectors first (X^2, XY, Y^2).
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Visits every exponent of nvars variables with total degree <= max_degree
/// in GradedLex order.
void for_each_exponent(std::size_t nvars, std::uint32_t max_degree,
                       const std::function<void(const Exponent&)>& visit);

/// Multivariate power series over Q known up to total degree D, stored in
/// the ordinary monomial basis (coefficient of X^e, not of X^e/e!).
///
/// Zero coefficients are never stored. Equality compares coefficients only
/// up to the smaller of the two degree bounds.
class TruncatedSeries {
public:
    using Terms = std::map<Exponent, Rational, GradedLex>;

    TruncatedSeries(std::size_t nvars, std::uint32_t degree_bound);

    static TruncatedSeries constant(std::size_t nvars, std::uint32_t degree_bound, const Rational& value);
    /// coeff * X^e; the zero series when |e| exceeds the bound.
    static TruncatedSeries monomial(std::size_t nvars, std::uint32_t degree_bound, const Exponent& e,
                                    const Rational& coeff = Rational(1));
    static TruncatedSeries variable(std::size_t nvars, std::uint32_t degree_bound, std::size_t var);

    std::size_t nvars() const { return nvars_; }
    std::uint32_t degree_bound() const { return degree_bound_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponent& e) const;
    /// Throws std::out_of_range when |e| exceeds the degree bound.
    void set(const Exponent& e, const Rational& value);
    void add_to(const Exponent& e, const Rational& value);

    /// Drops terms above the new bound, which must not exceed the current one.
    TruncatedSeries truncated(std::uint32_t degree_bound) const;

    /// {"nvars", "degree_bound", "terms": [{"exponents", "coeff"}]}
    std::string to_json() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    /// Cauchy product truncated at the common degree bound.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    void require_compatible(const TruncatedSeries& other, const char* op) const;

    std::size_t nvars_;
    std::uint32_t degree_bound_;
    Terms terms_;
};

/// Sum of a(e) X^e / e! over |e| <= D.
TruncatedSeries from_sequence(const SequenceRule& a, std::uint32_t degree_bound);

/// exp(c_1 X_1 + ... + c_m X_m) up to degree D.
TruncatedSeries exp_linear(const std::vector<Rational>& c, std::uint32_t degree_bound);

/// Formal partial derivative; the result is known to degree D-1.
/// Throws std::out_of_range for a bad variable, std::invalid_argument at D = 0.
TruncatedSeries deriv(const TruncatedSeries& f, std::size_t var);

/// X_var * f truncated at D.
TruncatedSeries mul_var(const TruncatedSeries& f, std::size_t var);

/// f(-X) * exp(X_1 + ... + X_m): the series of the binomial transform.
TruncatedSeries nabla_series(const TruncatedSeries& f);

/// (X_1 d_1 + ... + X_r d_r - x_1 X_1 - ... - x_r X_r) f, exact to degree D.
TruncatedSeries xi_apply(const TruncatedSeries& f, const std::vector<Rational>& x);

/// Linear form sum_j coeffs[j] Y_j as a series in coeffs.size() variables.
TruncatedSeries linear_form(const std::vector<Rational>& coeffs, std::uint32_t degree_bound);

/// f(L_1, ..., L_m) for linear forms L_i in a common target variable set,
/// truncated at f's bound. Throws std::invalid_argument if an image has a
/// constant or nonlinear term or the images disagree on variable count.
TruncatedSeries subst_linear(const TruncatedSeries& f, const std::vector<TruncatedSeries>& images);

/// Series in 2r variables (X, Y) whose X^n Y^k coefficient is
/// (Delta^k a)(n) / (n! k!).
TruncatedSeries F_from_sequence(const SequenceRule& a, std::uint32_t degree_bound);

}  // namespace mhsum
