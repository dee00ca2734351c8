#include "mhsum/series_checks.hpp"

#include <algorithm>
#include <stdexcept>

#include "mhsum/random_grid.hpp"

namespace mhsum {

namespace {

std::string describe(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out + ")";
}

void append(Report& into, const Report& from) {
    into.comparisons.insert(into.comparisons.end(), from.comparisons.begin(), from.comparisons.end());
}

// Variable images for a substitution into `target` variables.
TruncatedSeries var_form(std::size_t target, std::uint32_t degree, std::vector<std::pair<std::size_t, Rational>> terms) {
    std::vector<Rational> coeffs(target, Rational(0));
    for (auto& [var, c] : terms) coeffs[var] = c;
    return linear_form(coeffs, degree);
}

TruncatedSeries zero_form(std::size_t target, std::uint32_t degree) { return TruncatedSeries(target, degree); }

TruncatedSeries xi_plus(const TruncatedSeries& f, const std::vector<Rational>& x, const Rational& t) {
    return xi_apply(f, x) + t * f;
}

std::vector<Rational> column(const NestedSumSpec& spec, std::size_t level) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < spec.slots(); ++i) out.push_back(spec.x(i, level));
    return out;
}

}  // namespace

Report compare_series(std::string identity, std::string statement, std::string subject,
                      const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    if (lhs.nvars() != rhs.nvars()) throw std::invalid_argument("compare_series: variable counts differ");
    Report report{std::move(identity), std::move(statement), std::move(subject), {}};
    const auto bound = std::min(lhs.degree_bound(), rhs.degree_bound());
    for_each_exponent(lhs.nvars(), bound, [&](const Exponent& e) {
        report.comparisons.push_back({Index(e.begin(), e.end()), lhs.coeff(e), rhs.coeff(e)});
    });
    return report;
}

Report check_difference_series_factorization(const SequenceRule& a, std::uint32_t degree) {
    const std::size_t r = a.arity();
    std::vector<TruncatedSeries> images;
    for (std::size_t i = 0; i < r; ++i) images.push_back(var_form(2 * r, degree, {{i, 1}, {r + i, -1}}));
    std::vector<Rational> ys(2 * r, Rational(0));
    std::fill(ys.begin() + static_cast<std::ptrdiff_t>(r), ys.end(), Rational(1));
    const auto rhs = subst_linear(from_sequence(a, degree), images) * exp_linear(ys, degree);
    return compare_series("F-factorization", "F_a = f_a(X - Y) exp(Y_1 + ... + Y_r)",
                          "arity " + std::to_string(r), F_from_sequence(a, degree), rhs);
}

Report check_difference_series_slices(const SequenceRule& a, std::uint32_t degree) {
    const std::size_t r = a.arity();
    const auto F = F_from_sequence(a, degree);
    std::vector<TruncatedSeries> x_slice, y_slice;
    for (std::size_t i = 0; i < 2 * r; ++i) {
        x_slice.push_back(i < r ? var_form(r, degree, {{i, 1}}) : zero_form(r, degree));
        y_slice.push_back(i < r ? zero_form(r, degree) : var_form(r, degree, {{i - r, 1}}));
    }
    Report report = compare_series("F-slices", "F_a(X, 0) = f_a(X) and F_a(0, Y) = f_{nabla a}(Y)",
                                   "arity " + std::to_string(r), subst_linear(F, x_slice), from_sequence(a, degree));
    append(report, compare_series("", "", "", subst_linear(F, y_slice), from_sequence(nabla(a), degree)));
    return report;
}

Report check_difference_series_symmetry(const SequenceRule& a, std::uint32_t degree) {
    const std::size_t r = a.arity();
    std::vector<TruncatedSeries> swap;
    for (std::size_t i = 0; i < 2 * r; ++i) swap.push_back(var_form(2 * r, degree, {{(i + r) % (2 * r), 1}}));
    return compare_series("F-symmetry", "F_{nabla a}(X, Y) = F_a(Y, X)", "arity " + std::to_string(r),
                          F_from_sequence(nabla(a), degree), subst_linear(F_from_sequence(a, degree), swap));
}

Report check_difference_series_annihilator(const SequenceRule& a, std::uint32_t degree) {
    const std::size_t r = a.arity();
    const auto F = F_from_sequence(a, degree);
    Report report{"F-annihilator", "(d/dX_i + d/dY_i - 1) F_a = 0 for every i", "arity " + std::to_string(r), {}};
    for (std::size_t i = 0; i < r; ++i) {
        const auto lhs = deriv(F, i) + deriv(F, r + i) - F.truncated(degree - 1);
        append(report, compare_series("", "", "", lhs, TruncatedSeries(2 * r, degree - 1)));
    }
    return report;
}

Report check_series_inversion(const SequenceRule& a, std::uint32_t degree) {
    return compare_series("series-inversion", "f_{nabla a} = f_a(-X) exp(X_1 + ... + X_r)",
                          "arity " + std::to_string(a.arity()), from_sequence(nabla(a), degree),
                          nabla_series(from_sequence(a, degree)));
}

Report check_inverted_multiplication_and_derivative(const TruncatedSeries& f) {
    Report report{"inverted-operators", "nabla X_i = -X_i and nabla d_i = 1 - d_i",
                  "nvars " + std::to_string(f.nvars()), {}};
    const auto inv = nabla_series(f);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        append(report, compare_series("", "", "", nabla_series(mul_var(f, i)), -mul_var(inv, i)));
        const auto lhs = nabla_series(deriv(f, i));
        const auto rhs = inv.truncated(f.degree_bound() - 1) - deriv(inv, i);
        append(report, compare_series("", "", "", lhs, rhs));
    }
    return report;
}

Report check_inverted_xi(const TruncatedSeries& f, const std::vector<Rational>& x) {
    std::vector<Rational> complement;
    for (const auto& v : x) complement.push_back(Rational(1) - v);
    return compare_series("inverted-xi", "nabla xi_x = xi_{1-x}", "x=" + describe(x),
                          nabla_series(xi_apply(f, x)), xi_apply(nabla_series(f), complement));
}

Report check_commutator(const std::vector<Rational>& x, const std::vector<std::size_t>& subset,
                        const Rational& t, std::uint32_t degree_bound) {
    const std::size_t m = x.size();
    Rational c;
    for (auto i : subset) {
        if (i >= m) throw std::invalid_argument("check_commutator: subset slot out of range");
        c += x[i];
    }
    auto A = [&](const TruncatedSeries& f) {
        TruncatedSeries out = -(c * f.truncated(f.degree_bound() - 1));
        for (auto i : subset) out += deriv(f, i);
        return out;
    };
    auto B = [&](const TruncatedSeries& f) { return xi_plus(f, x, t); };

    Report report{"commutator", "[sum_{i in S} d_i - c, xi_x + t] = sum_{i in S} d_i - c",
                  "x=" + describe(x) + " t=" + t.to_string(), {}};
    for_each_exponent(m, degree_bound - 1, [&](const Exponent& e) {
        const auto f = TruncatedSeries::monomial(m, degree_bound, e);
        const auto lhs = A(B(f)) - B(A(f));
        append(report, compare_series("", "", "", lhs, A(f)));
    });
    return report;
}

Report check_series_duality(const NestedSumSpec& spec, std::uint32_t degree) {
    return compare_series("series-duality", "nabla f_{x_1;...;x_r} = f_{1-x_1;...;1-x_r}", spec.to_string(),
                          nabla_series(from_sequence(c_direct_rule(spec), degree)),
                          from_sequence(c_direct_rule(one_minus(spec)), degree));
}

Report check_depth_step(const NestedSumSpec& spec, std::uint32_t degree) {
    const auto f = from_sequence(c_direct_rule(spec), degree);
    return compare_series("depth-step", "(xi_{x_11..x_r1} + t_1) f_{x} = f_{-x}", spec.to_string(),
                          xi_plus(f, column(spec, 0), spec.shifts().front()),
                          from_sequence(c_direct_rule(reduce_depth(spec)), degree));
}

Report check_telescoped_depth_steps(const NestedSumSpec& spec, std::uint32_t degree) {
    auto f = from_sequence(c_direct_rule(spec), degree);
    for (std::size_t j = 0; j + 1 < spec.depth(); ++j) f = xi_plus(f, column(spec, j), spec.shifts()[j]);
    return compare_series("telescoped-depth-steps", "prod_j (xi_{x_.j} + t_j) f_{x} = exp(x_1p X_1 + ... + x_rp X_r)",
                          spec.to_string(), f, exp_linear(column(spec, spec.depth() - 1), degree));
}

std::vector<Report> run_series_suite(std::uint64_t seed, std::uint32_t degree, unsigned trials) {
    if (degree < 1) throw std::invalid_argument("series suite needs degree >= 1");
    GridRandom rng(seed);
    std::vector<Report> reports;
    for (unsigned trial = 0; trial < trials; ++trial) {
        const std::size_t r = 1 + trial % 2;
        const auto a = random_sequence(r, rng.below(1u << 30));
        reports.push_back(check_difference_series_factorization(a, degree));
        reports.push_back(check_difference_series_slices(a, degree));
        reports.push_back(check_difference_series_symmetry(a, degree));
        reports.push_back(check_difference_series_annihilator(a, degree));
        reports.push_back(check_series_inversion(a, degree));

        const auto f = from_sequence(random_sequence(r, rng.below(1u << 30)), degree);
        std::vector<Rational> x(r);
        for (auto& v : x) v = rng.small_rational();
        reports.push_back(check_inverted_multiplication_and_derivative(f));
        reports.push_back(check_inverted_xi(f, x));

        std::vector<std::size_t> subset{0};
        if (r == 2 && trial % 4 == 1) subset.push_back(1);
        else if (r == 2) subset = {trial % 4 == 3 ? std::size_t{1} : std::size_t{0}};
        reports.push_back(check_commutator(x, subset, rng.shift(), degree));

        const auto spec = rng.spec(r, 2 + trial % 2);
        reports.push_back(check_series_duality(spec, degree));
        reports.push_back(check_depth_step(spec, degree));
        reports.push_back(check_telescoped_depth_steps(spec, degree));
    }
    return reports;
}

}  // namespace mhsum
