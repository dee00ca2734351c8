#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "mhsum/mhs.hpp"
#include "mhsum/nested_sum.hpp"
#include "mhsum/random_grid.hpp"
#include "mhsum/report.hpp"
#include "mhsum/text_syntax.hpp"
#include "mhsum/verify.hpp"

using namespace mhsum;

TEST_CASE("duality on a single point") {
    // Both sides of the r=1, p=2 identity at n=1, x=(1/2,1/3), t=2:
    // 1/t - c(1) = ((1-x1) + t(1-x2)) / (t(1+t)) = 11/36.
    const auto report = verify_duality(parse_spec("1/2,1/3", "2"), {2});
    REQUIRE(report.comparisons.size() == 2);
    CHECK(report.comparisons[1].lhs == Rational(11, 36));
    CHECK(report.comparisons[1].rhs == Rational(11, 36));
    CHECK(report.all_equal());
}

TEST_CASE("duality degenerate and self-dual cases") {
    const auto p1 = verify_duality(parse_spec("2/7;-3", ""), {4, 4});
    CHECK(p1.all_equal());
    for (const auto& c : p1.comparisons)
        CHECK(c.rhs == pow(Rational(5, 7), c.index[0]) * pow(Rational(4), c.index[1]));

    const auto half = parse_spec("1/2,1/2,1/2;1/2,1/2,1/2", "3/4,-5/2");
    CHECK(one_minus(half) == half);
    const auto report = verify_duality(half, {3, 3});
    CHECK(report.all_equal());
    const auto c = c_direct_rule(half);
    for (const auto& cmp : report.comparisons) CHECK(cmp.lhs == c(cmp.index));
}

TEST_CASE("duality reproduces the KT duality for unit shifts") {
    GridRandom rng(8);
    for (std::size_t p = 1; p <= 3; ++p) {
        const auto spec = NestedSumSpec({rng.spec(1, p).xblocks()[0]}, ParamVector(p - 1, Rational(1)));
        CHECK(verify_duality(spec, {6}).all_equal());
    }
}

TEST_CASE("difference formula") {
    const auto spec = parse_spec("0,1", "1");
    const auto report = verify_difference_formula(spec, {3}, {3});
    CHECK(report.all_equal());
    // n=1, k=1: c(1) - c(2) = 1/6, frozen from the Python oracle.
    bool seen = false;
    for (const auto& c : report.comparisons)
        if (c.index == Index{1, 1}) {
            CHECK(c.lhs == Rational(1, 6));
            seen = true;
        }
    CHECK(seen);

    SUBCASE("k = 0 slice is the identity and n = 0 slice is the duality") {
        const auto s = parse_spec("1/3,-2;3/4,5", "-3/2");
        const auto diff = verify_difference_formula(s, {3, 3}, {3, 3});
        CHECK(diff.all_equal());
        const auto c = c_direct_rule(s);
        const auto dual = one_minus(s);
        for (const auto& cmp : diff.comparisons) {
            const Index n(cmp.index.begin(), cmp.index.begin() + 2);
            const Index k(cmp.index.begin() + 2, cmp.index.end());
            if (k == Index{0, 0}) CHECK(cmp.rhs == c(n));
            if (n == Index{0, 0}) CHECK(cmp.rhs == c_direct(dual, k));
        }
    }
}

TEST_CASE("shift identity") {
    const auto report = verify_shift_identity(parse_spec("1/3;2/3", ""), {0, 1}, Rational(1), {3, 3});
    CHECK(report.all_equal());
    for (const auto& c : report.comparisons)
        if (c.index == Index{1, 1}) CHECK(c.lhs == Rational(2, 9));

    CHECK(verify_shift_identity(parse_spec("5/4,5/4", "7/2"), {0}, Rational(5, 4), {5}).all_equal());

    const auto doubled = with_complements(parse_spec("1/5,-2;3,1/7", "9/4"));
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(verify_shift_identity(doubled, {i, i + 2}, Rational(1), {3, 3, 3, 3}).all_equal());

    CHECK_THROWS_AS(verify_shift_identity(parse_spec("1/3;1/2", ""), {0, 1}, Rational(1), {2, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_shift_identity(parse_spec("1/3;2/3", ""), {0, 0}, Rational(2, 3), {2, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_shift_identity(parse_spec("1/3;2/3", ""), {2}, Rational(1), {2, 2}),
                    std::invalid_argument);
}

TEST_CASE("recurrence report and worker-independence") {
    GridRandom rng(3);
    const auto spec = rng.spec(2, 3);
    const auto serial = verify_recurrence(spec, {4, 4});
    const auto parallel = verify_recurrence(spec, {4, 4}, SweepOptions{kDefaultSummandGuard, 4});
    CHECK(serial.all_equal());
    CHECK(report_to_json(serial) == report_to_json(parallel));
    CHECK(report_to_json(verify_duality(spec, {3, 3})) ==
          report_to_json(verify_duality(spec, {3, 3}, SweepOptions{kDefaultSummandGuard, 3})));
}

TEST_CASE("mhs duality report") {
    const auto report = verify_mhs_duality(MultiIndex({1, 2, 3}), 4);
    CHECK(report.comparisons.size() == 5);
    CHECK(report.all_equal());
}

TEST_CASE("report serialization schema") {
    Report report{"demo", "a = b", "x=1 t=", {{{0}, Rational(1, 2), Rational(1, 2)}, {{1}, Rational(1), Rational(2)}}};
    CHECK(report.failures() == 1);
    const auto j = nlohmann::json::parse(report_to_json(report));
    CHECK(j["all_equal"] == false);
    const auto& row = j["comparisons"][0];
    for (const char* key : {"identity", "spec", "index", "lhs", "rhs", "equal"}) CHECK(row.contains(key));
    CHECK(row["lhs"] == "1/2");
    CHECK(row["index"] == nlohmann::json::array({0}));

    CHECK(report_to_csv(report) ==
          "identity,spec,index,lhs,rhs,equal\ndemo,\"x=1 t=\",\"(0)\",1/2,1/2,true\ndemo,\"x=1 t=\",\"(1)\",1,2,false\n");
    CHECK(report_to_text(report).find("FAIL") != std::string::npos);

    const auto all = nlohmann::json::parse(reports_to_json({report, report}));
    CHECK(all["failures"] == 2);
    CHECK(all["reports"].size() == 2);
}
