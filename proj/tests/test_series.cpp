#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "mhsum/random_grid.hpp"
#include "mhsum/series.hpp"
#include "mhsum/series_checks.hpp"
#include "mhsum/text_syntax.hpp"
#include "support/test_rules.hpp"

using namespace mhsum;
using mhsum::testing::constant_rule;
using mhsum::testing::geometric_rule;
using mhsum::testing::random_rule;

namespace {

TruncatedSeries poly1(std::uint32_t degree, std::vector<Rational> coeffs) {
    TruncatedSeries f(1, degree);
    for (std::uint32_t k = 0; k < coeffs.size(); ++k) f.set({k}, coeffs[k]);
    return f;
}

TruncatedSeries random_series(std::size_t nvars, std::uint32_t degree, std::uint64_t seed) {
    GridRandom rng(seed);
    TruncatedSeries f(nvars, degree);
    for_each_exponent(nvars, degree, [&](const Exponent& e) { f.set(e, rng.small_rational()); });
    return f;
}

}  // namespace

TEST_CASE("exponent order is graded") {
    std::vector<Exponent> seen;
    for_each_exponent(2, 2, [&](const Exponent& e) { seen.push_back(e); });
    CHECK(seen == std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("from_sequence and exp_linear") {
    CHECK(from_sequence(constant_rule(1, 1), 2) == poly1(2, {1, 1, Rational(1, 2)}));
    CHECK(from_sequence(geometric_rule(Rational(2, 3)), 5) == exp_linear({Rational(2, 3)}, 5));
    const SequenceRule delta0(1, [](const Index& n) { return Rational(n[0] == 0 ? 1 : 0); });
    CHECK(from_sequence(delta0, 4) == TruncatedSeries::constant(1, 4, 1));

    CHECK(exp_linear({0, 0}, 3) == TruncatedSeries::constant(2, 3, 1));
    CHECK(exp_linear({1}, 2) == poly1(2, {1, 1, Rational(1, 2)}));
    CHECK(exp_linear({1, 1}, 4) == from_sequence(constant_rule(2, 1), 4));
}

TEST_CASE("ring operations") {
    const auto f = random_series(2, 4, 1);
    CHECK(f * TruncatedSeries::constant(2, 4, 1) == f);
    CHECK(poly1(2, {1, 1}) * poly1(2, {1, -1}) == poly1(2, {1, 0, -1}));
    CHECK(exp_linear({Rational(1, 2), 3}, 5) * exp_linear({Rational(-2), Rational(1, 3)}, 5) ==
          exp_linear({Rational(-3, 2), Rational(10, 3)}, 5));
    CHECK((f - f).is_zero());
    CHECK((Rational(3) * f).coeff({1, 1}) == Rational(3) * f.coeff({1, 1}));

    CHECK_THROWS_AS(f + random_series(2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(f * random_series(1, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(1, 2).set({3}, 1), std::out_of_range);
    CHECK_THROWS_AS(f.truncated(5), std::invalid_argument);
}

TEST_CASE("deriv and mul_var") {
    const auto x2 = TruncatedSeries::monomial(1, 4, {2});
    CHECK(deriv(x2, 0) == TruncatedSeries::monomial(1, 3, {1}, 2));
    CHECK(deriv(x2, 0).degree_bound() == 3);
    CHECK(deriv(TruncatedSeries::constant(2, 3, 7), 1).is_zero());
    const auto e = exp_linear({Rational(5, 3)}, 6);
    CHECK(deriv(e, 0) == Rational(5, 3) * e.truncated(5));
    CHECK_THROWS_AS(deriv(e, 1), std::out_of_range);

    CHECK(mul_var(TruncatedSeries::constant(1, 3, 1), 0) == TruncatedSeries::variable(1, 3, 0));
    CHECK(mul_var(TruncatedSeries::monomial(1, 3, {3}), 0).is_zero());
    CHECK_THROWS_AS(mul_var(e, 2), std::out_of_range);

    const auto f = random_series(2, 6, 4);
    for (std::size_t v = 0; v < 2; ++v)
        CHECK(deriv(mul_var(f, v), v) - mul_var(deriv(f, v), v) == f.truncated(5));
}

TEST_CASE("subst_linear") {
    const auto f = poly1(2, {1, 1, Rational(1, 2)});
    CHECK(subst_linear(f, {linear_form({1}, 2)}) == f);
    CHECK(subst_linear(f, {linear_form({-1}, 2)}) == poly1(2, {1, -1, Rational(1, 2)}));
    const auto sq = TruncatedSeries::monomial(1, 3, {2});
    TruncatedSeries expect(2, 3);
    expect.set({2, 0}, 1);
    expect.set({1, 1}, -2);
    expect.set({0, 2}, 1);
    CHECK(subst_linear(sq, {linear_form({1, -1}, 3)}) == expect);

    CHECK_THROWS_AS(subst_linear(sq, {TruncatedSeries::constant(1, 3, 1) + linear_form({1}, 3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(subst_linear(sq, {TruncatedSeries::monomial(1, 3, {2})}), std::invalid_argument);
    CHECK_THROWS_AS(subst_linear(sq, {linear_form({1}, 3), linear_form({1}, 3)}), std::invalid_argument);
}

TEST_CASE("nabla_series") {
    CHECK(nabla_series(TruncatedSeries::constant(2, 5, 1)) == exp_linear({1, 1}, 5));
    CHECK(nabla_series(exp_linear({Rational(2, 7)}, 6)) == exp_linear({Rational(5, 7)}, 6));
    const auto f = random_series(2, 6, 9);
    CHECK(nabla_series(nabla_series(f)) == f);
    const auto a = random_rule(2, 10);
    CHECK(from_sequence(nabla(a), 6) == nabla_series(from_sequence(a, 6)));
}

TEST_CASE("xi_apply") {
    CHECK(xi_apply(exp_linear({Rational(-4, 3)}, 6), {Rational(-4, 3)}).is_zero());
    CHECK(xi_apply(TruncatedSeries::monomial(1, 6, {4}), {0}) == TruncatedSeries::monomial(1, 6, {4}, 4));
    CHECK_THROWS_AS(xi_apply(exp_linear({1}, 3), {1, 2}), std::invalid_argument);

    // Against the operator composition sum X_i d_i - sum x_i X_i.
    const auto f = random_series(2, 6, 12);
    const std::vector<Rational> x{Rational(1, 3), Rational(-2)};
    TruncatedSeries composed = mul_var(deriv(f, 0), 0) + mul_var(deriv(f, 1), 1);
    composed -= (x[0] * mul_var(f, 0) + x[1] * mul_var(f, 1)).truncated(5);
    CHECK(xi_apply(f, x) == composed);

    const auto spec = parse_spec("1/2,3;-2,1/5", "7/3");
    CHECK(check_depth_step(spec, 6).all_equal());
}

TEST_CASE("F_from_sequence") {
    CHECK(F_from_sequence(constant_rule(1, 1), 6) == exp_linear({1, 0}, 6));
    const auto a = random_rule(1, 14);
    CHECK(check_difference_series_slices(a, 6).all_equal());
    CHECK(check_difference_series_factorization(a, 6).all_equal());
}

TEST_CASE("series JSON") {
    TruncatedSeries f(2, 2);
    f.set({0, 1}, Rational(-1, 2));
    f.set({1, 0}, 3);
    const auto j = nlohmann::json::parse(f.to_json());
    CHECK(j["nvars"] == 2);
    CHECK(j["degree_bound"] == 2);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["exponents"] == nlohmann::json::array({1, 0}));
    CHECK(j["terms"][1]["coeff"] == "-1/2");
}

TEST_CASE("a broken identity is reported, not hidden") {
    const auto lhs = exp_linear({1}, 3);
    const auto rhs = exp_linear({2}, 3);
    const auto report = compare_series("demo", "", "", lhs, rhs);
    CHECK(report.comparisons.size() == 4);
    CHECK(report.failures() == 3);
}

TEST_CASE("difference series identities on random tables") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto a = random_rule(1 + seed % 2, seed);
        CHECK(check_difference_series_symmetry(a, 5).all_equal());
        CHECK(check_difference_series_annihilator(a, 5).all_equal());
        CHECK(check_series_inversion(a, 5).all_equal());
    }
    CHECK(check_series_inversion(geometric_rule(Rational(1, 3)), 7).all_equal());
    CHECK(check_series_inversion(constant_rule(2, Rational(5)), 4).all_equal());
}

TEST_CASE("inverted operators") {
    const auto f = random_series(2, 5, 11);
    CHECK(check_inverted_multiplication_and_derivative(f).all_equal());
    CHECK(check_inverted_xi(f, {Rational(1, 2), Rational(-3)}).all_equal());
    CHECK(check_inverted_xi(random_series(1, 6, 12), {Rational(7, 4)}).all_equal());
}

TEST_CASE("commutator of the shifted xi operator") {
    const std::vector<Rational> x{Rational(1, 3), Rational(-2), Rational(5, 7)};
    CHECK(check_commutator(x, {0, 2}, Rational(-3, 2), 4).all_equal());
    CHECK(check_commutator(x, {1}, Rational(0), 4).all_equal());
    CHECK(check_commutator({Rational(2)}, {0}, Rational(1), 6).all_equal());
}

TEST_CASE("nested sum series identities") {
    const auto spec = parse_spec("1/2,-2/3,3;5/7,1/4,-1", "-3/2,2/5");
    CHECK(check_series_duality(spec, 5).all_equal());
    CHECK(check_telescoped_depth_steps(spec, 5).all_equal());
    const auto depth1 = parse_spec("2;3", "");
    CHECK(check_series_duality(depth1, 5).all_equal());
    CHECK(check_telescoped_depth_steps(depth1, 5).all_equal());
}

TEST_CASE("series suite is deterministic and green") {
    const auto first = run_series_suite(3, 4, 2);
    const auto second = run_series_suite(3, 4, 2);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].all_equal());
        CHECK(first[i].subject == second[i].subject);
    }
}
