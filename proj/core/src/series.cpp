#include "mhsum/series.hpp"

#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "mhsum/combinatorics.hpp"

namespace mhsum {

std::uint64_t total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

namespace {

void fill_degree(Exponent& e, std::size_t pos, std::uint32_t remaining,
                 const std::function<void(const Exponent&)>& visit) {
    if (pos + 1 == e.size()) {
        e[pos] = remaining;
        visit(e);
        return;
    }
    for (std::uint32_t v = remaining + 1; v-- > 0;) {
        e[pos] = v;
        fill_degree(e, pos + 1, remaining - v, visit);
    }
}

Rational factorial_weight(const Exponent& e) {
    Integer denom = 1;
    for (auto v : e) denom *= factorial(v);
    return Rational(Integer(1), denom);
}

}  // namespace

void for_each_exponent(std::size_t nvars, std::uint32_t max_degree,
                       const std::function<void(const Exponent&)>& visit) {
    if (nvars == 0) throw std::invalid_argument("series need at least one variable");
    Exponent e(nvars, 0);
    for (std::uint32_t d = 0; d <= max_degree; ++d) fill_degree(e, 0, d, visit);
}

TruncatedSeries::TruncatedSeries(std::size_t nvars, std::uint32_t degree_bound)
    : nvars_(nvars), degree_bound_(degree_bound) {
    if (nvars_ == 0) throw std::invalid_argument("series need at least one variable");
}

TruncatedSeries TruncatedSeries::constant(std::size_t nvars, std::uint32_t degree_bound, const Rational& value) {
    TruncatedSeries f(nvars, degree_bound);
    f.set(Exponent(nvars, 0), value);
    return f;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t nvars, std::uint32_t degree_bound, const Exponent& e,
                                          const Rational& coeff) {
    if (e.size() != nvars) throw std::invalid_argument("monomial exponent has wrong length");
    TruncatedSeries f(nvars, degree_bound);
    if (total_degree(e) <= degree_bound) f.set(e, coeff);
    return f;
}

TruncatedSeries TruncatedSeries::variable(std::size_t nvars, std::uint32_t degree_bound, std::size_t var) {
    if (var >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[var] = 1;
    return monomial(nvars, degree_bound, e);
}

Rational TruncatedSeries::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set(const Exponent& e, const Rational& value) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent has wrong length");
    if (total_degree(e) > degree_bound_) throw std::out_of_range("exponent exceeds the degree bound");
    if (value.is_zero()) terms_.erase(e);
    else terms_[e] = value;
}

void TruncatedSeries::add_to(const Exponent& e, const Rational& value) {
    if (value.is_zero()) return;
    set(e, coeff(e) + value);
}

TruncatedSeries TruncatedSeries::truncated(std::uint32_t degree_bound) const {
    if (degree_bound > degree_bound_) throw std::invalid_argument("cannot raise a degree bound");
    TruncatedSeries out(nvars_, degree_bound);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= degree_bound) out.terms_.emplace(e, c);
    return out;
}

std::string TruncatedSeries::to_json() const {
    nlohmann::ordered_json j;
    j["nvars"] = nvars_;
    j["degree_bound"] = degree_bound_;
    auto& terms = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) terms.push_back({{"exponents", e}, {"coeff", c.to_string()}});
    return j.dump();
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other, const char* op) const {
    if (nvars_ != other.nvars_ || degree_bound_ != other.degree_bound_)
        throw std::invalid_argument(std::string(op) + ": series differ in variable count or degree bound");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_compatible(rhs, "add");
    for (const auto& [e, c] : rhs.terms_) add_to(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_compatible(rhs, "subtract");
    for (const auto& [e, c] : rhs.terms_) add_to(e, -c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b, "multiply");
    TruncatedSeries out(a.nvars_, a.degree_bound_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        const auto da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > a.degree_bound_) break;  // GradedLex: later terms only grow
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_to(e, ca * cb);
        }
    }
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.nvars_ != b.nvars_) return false;
    const auto bound = std::min(a.degree_bound_, b.degree_bound_);
    return a.truncated(bound).terms_ == b.truncated(bound).terms_;
}

TruncatedSeries from_sequence(const SequenceRule& a, std::uint32_t degree_bound) {
    TruncatedSeries f(a.arity(), degree_bound);
    for_each_exponent(a.arity(), degree_bound, [&](const Exponent& e) {
        const Index n(e.begin(), e.end());
        f.set(e, a(n) * factorial_weight(e));
    });
    return f;
}

TruncatedSeries exp_linear(const std::vector<Rational>& c, std::uint32_t degree_bound) {
    TruncatedSeries f(c.size(), degree_bound);
    for_each_exponent(c.size(), degree_bound, [&](const Exponent& e) {
        Rational value = factorial_weight(e);
        for (std::size_t i = 0; i < e.size(); ++i) value *= pow(c[i], e[i]);
        f.set(e, value);
    });
    return f;
}

TruncatedSeries deriv(const TruncatedSeries& f, std::size_t var) {
    if (var >= f.nvars()) throw std::out_of_range("deriv: variable index out of range");
    if (f.degree_bound() == 0) throw std::invalid_argument("deriv: series known only to degree 0");
    TruncatedSeries out(f.nvars(), f.degree_bound() - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exponent lowered = e;
        --lowered[var];
        out.set(lowered, c * Rational(e[var]));
    }
    return out;
}

TruncatedSeries mul_var(const TruncatedSeries& f, std::size_t var) {
    if (var >= f.nvars()) throw std::out_of_range("mul_var: variable index out of range");
    TruncatedSeries out(f.nvars(), f.degree_bound());
    for (const auto& [e, c] : f.terms()) {
        if (total_degree(e) + 1 > f.degree_bound()) continue;
        Exponent raised = e;
        ++raised[var];
        out.set(raised, c);
    }
    return out;
}

TruncatedSeries linear_form(const std::vector<Rational>& coeffs, std::uint32_t degree_bound) {
    TruncatedSeries f(coeffs.size(), degree_bound);
    if (degree_bound == 0) return f;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        Exponent e(coeffs.size(), 0);
        e[j] = 1;
        f.set(e, coeffs[j]);
    }
    return f;
}

TruncatedSeries subst_linear(const TruncatedSeries& f, const std::vector<TruncatedSeries>& images) {
    if (images.size() != f.nvars())
        throw std::invalid_argument("subst_linear: need one image per variable");
    const std::size_t target = images.front().nvars();
    const std::uint32_t bound = f.degree_bound();

    // powers[i][k] = L_i^k truncated at the bound.
    std::vector<std::vector<TruncatedSeries>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const auto& img = images[i];
        if (img.nvars() != target)
            throw std::invalid_argument("subst_linear: images use different variable sets");
        TruncatedSeries form(target, bound);
        for (const auto& [e, c] : img.terms()) {
            if (total_degree(e) != 1)
                throw std::invalid_argument("subst_linear: image " + std::to_string(i) +
                                            " is not a linear form without constant term");
            if (bound >= 1) form.set(e, c);
        }
        powers[i].push_back(TruncatedSeries::constant(target, bound, Rational(1)));
        for (std::uint32_t k = 1; k <= bound; ++k) powers[i].push_back(powers[i].back() * form);
    }

    TruncatedSeries out(target, bound);
    for (const auto& [e, c] : f.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(target, bound, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

TruncatedSeries nabla_series(const TruncatedSeries& f) {
    std::vector<TruncatedSeries> negate;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        std::vector<Rational> coeffs(f.nvars(), Rational(0));
        coeffs[i] = Rational(-1);
        negate.push_back(linear_form(coeffs, f.degree_bound()));
    }
    return subst_linear(f, negate) * exp_linear(std::vector<Rational>(f.nvars(), Rational(1)), f.degree_bound());
}

TruncatedSeries xi_apply(const TruncatedSeries& f, const std::vector<Rational>& x) {
    if (x.size() != f.nvars()) throw std::invalid_argument("xi_apply: need one parameter per variable");
    TruncatedSeries out(f.nvars(), f.degree_bound());
    for (const auto& [e, c] : f.terms()) {
        // Euler part: sum_i X_i d_i X^e = |e| X^e.
        out.add_to(e, c * Rational(total_degree(e)));
        if (total_degree(e) + 1 > f.degree_bound()) continue;
        Exponent raised = e;
        for (std::size_t i = 0; i < x.size(); ++i) {
            ++raised[i];
            out.add_to(raised, -(x[i] * c));
            --raised[i];
        }
    }
    return out;
}

TruncatedSeries F_from_sequence(const SequenceRule& a, std::uint32_t degree_bound) {
    const std::size_t r = a.arity();
    TruncatedSeries F(2 * r, degree_bound);
    for_each_exponent(2 * r, degree_bound, [&](const Exponent& e) {
        const Index n(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(r));
        const Index k(e.begin() + static_cast<std::ptrdiff_t>(r), e.end());
        F.set(e, iterated_delta(a, k, n) * factorial_weight(e));
    });
    return F;
}

}  // namespace mhsum
