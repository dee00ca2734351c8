#include <doctest.h>

#include <thread>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/mhs.hpp"
#include "mhsum/random_grid.hpp"
#include "mhsum/sequence.hpp"
#include "support/test_rules.hpp"

using namespace mhsum;
using mhsum::testing::constant_rule;
using mhsum::testing::geometric_rule;
using mhsum::testing::random_rule;

namespace {

// k-fold composition of single-axis deltas, the oracle for iterated_delta.
Rational composed_delta(SequenceRule a, const Index& k, const Index& n) {
    for (std::size_t axis = 0; axis < k.size(); ++axis)
        for (std::uint64_t step = 0; step < k[axis]; ++step) a = delta(a, axis);
    return a(n);
}

}  // namespace

TEST_CASE("delta") {
    const auto zero = delta(constant_rule(2, Rational(7, 3)), 1);
    for_each_in_box({3, 3}, [&](const Index& n) { CHECK(zero(n).is_zero()); });

    const SequenceRule identity(1, [](const Index& n) { return Rational(n[0]); });
    CHECK(delta(identity, 0)({0}) == Rational(-1));

    CHECK(delta(geometric_rule(2), 0)({1}) == Rational(-2));

    CHECK_THROWS_AS(delta(identity, 1), std::out_of_range);
    CHECK_THROWS_AS(identity({1, 2}), std::invalid_argument);
}

TEST_CASE("iterated_delta") {
    const auto a = random_rule(2, 3);
    CHECK(iterated_delta(a, {0, 0}, {2, 1}) == a({2, 1}));
    CHECK(iterated_delta(geometric_rule(3), {2}, {0}) == Rational(4));

    const SequenceRule xy(2, [](const Index& n) { return pow(Rational(2), n[0]) * pow(Rational(5), n[1]); });
    CHECK(iterated_delta(xy, {1, 1}, {0, 0}) == Rational(4));  // (1-2)(1-5)

    SUBCASE("matches composition of deltas") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const std::size_t r = 1 + seed % 3;
            const auto rule = random_rule(r, seed);
            GridRandom rng(seed + 1000);
            for (int trial = 0; trial < 6; ++trial) {
                Index k(r), n(r);
                for (std::size_t i = 0; i < r; ++i) {
                    k[i] = rng.below(r == 3 ? 3 : 5);
                    n[i] = rng.below(4);
                }
                CHECK(iterated_delta(rule, k, n) == composed_delta(rule, k, n));
            }
        }
    }
    SUBCASE("axes commute") {
        const auto rule = random_rule(2, 8);
        for_each_in_box({4, 4}, [&](const Index& n) {
            CHECK(delta(delta(rule, 0), 1)(n) == delta(delta(rule, 1), 0)(n));
        });
    }
}

TEST_CASE("nabla") {
    const auto one = nabla(constant_rule(2, Rational(1)));
    for_each_in_box({4, 4}, [&](const Index& n) {
        CHECK(one(n) == Rational(n == Index{0, 0} ? 1 : 0));
    });

    CHECK(nabla(geometric_rule(Rational(1, 3)))({2}) == Rational(4, 9));
    CHECK(nabla(mhs_sequence(MultiIndex({2})))({1}) == Rational(3, 4));

    SUBCASE("equals iterated delta at the origin") {
        const auto a = random_rule(2, 21);
        const auto inv = nabla(a);
        for_each_in_box({4, 3}, [&](const Index& n) { CHECK(inv(n) == iterated_delta(a, n, {0, 0})); });
    }
    SUBCASE("is an involution") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const std::size_t r = 1 + seed % 2;
            const auto a = random_rule(r, seed * 7);
            const auto back = nabla(nabla(a));
            for_each_in_box(std::vector<std::uint64_t>(r, 6), [&](const Index& n) { CHECK(back(n) == a(n)); });
        }
    }
    SUBCASE("index symmetry of differences of the inverse") {
        const auto a = random_rule(2, 77);
        const auto inv = nabla(a);
        for_each_in_box({3, 3}, [&](const Index& n) {
            for_each_in_box({3, 3}, [&](const Index& k) {
                CHECK(iterated_delta(inv, k, n) == iterated_delta(a, n, k));
            });
        });
    }
}

TEST_CASE("delta and nabla are linear") {
    const auto a = random_rule(2, 1), b = random_rule(2, 2);
    const Rational alpha(3, 4), beta(-5, 2);
    const auto mix = combine(alpha, a, beta, b);
    const auto mix_nabla = nabla(mix);
    const auto mix_delta = delta(mix, 1);
    const auto na = nabla(a), nb = nabla(b);
    for_each_in_box({4, 4}, [&](const Index& n) {
        CHECK(mix_nabla(n) == alpha * na(n) + beta * nb(n));
        CHECK(mix_delta(n) == alpha * delta(a, 1)(n) + beta * delta(b, 1)(n));
    });
    CHECK_THROWS_AS(combine(alpha, a, beta, random_rule(1, 0)), std::invalid_argument);
}

TEST_CASE("materialize") {
    const auto zeros = materialize(constant_rule(2, Rational(0)), {3, 3});
    CHECK(zeros.values().size() == 9);
    for (const auto& v : zeros.values()) CHECK(v.is_zero());

    const SequenceRule identity(1, [](const Index& n) { return Rational(n[0]); });
    const auto ramp = materialize(identity, {4});
    CHECK(ramp.values() == std::vector<Rational>{0, 1, 2, 3});

    const auto powers = materialize(geometric_rule(2), {3});
    CHECK(powers.values() == std::vector<Rational>{1, 2, 4});

    const auto a = random_rule(3, 4);
    const auto table = materialize(a, {2, 3, 4});
    for_each_in_box({2, 3, 4}, [&](const Index& n) { CHECK(table.at(n) == a(n)); });
    CHECK_THROWS_AS(table.at({2, 0, 0}), std::out_of_range);

    CHECK_THROWS_AS(materialize(a, {2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(materialize(a, {100, 100, 100}, 1000), GuardExceeded);
}

TEST_CASE("table export") {
    const SequenceRule half(2, [](const Index& n) { return Rational(static_cast<long>(n[0]), 2) - Rational(n[1]); });
    const auto table = materialize(half, {2, 2});
    CHECK(table.to_csv() == "n1,n2,value\n0,0,0\n0,1,-1\n1,0,1/2\n1,1,-1/2\n");
    CHECK(table.to_json() == R"({"shape":[2,2],"values":["0","-1","1/2","-1/2"]})");
}

TEST_CASE("memo is write-once and shared across copies") {
    int calls = 0;
    const SequenceRule counted(1, [&calls](const Index& n) {
        ++calls;
        return Rational(n[0]);
    });
    const SequenceRule copy = counted;
    CHECK(counted({3}) == Rational(3));
    CHECK(copy({3}) == Rational(3));
    CHECK(calls == 1);
    CHECK(copy.cached_entries() == 1);
}

TEST_CASE("concurrent evaluation agrees with serial evaluation") {
    const auto a = random_rule(2, 31);
    const auto shared = nabla(a);
    const auto serial = nabla(random_rule(2, 31));
    std::vector<std::thread> pool;
    std::vector<std::vector<Rational>> seen(4);
    for (int w = 0; w < 4; ++w)
        pool.emplace_back([&, w] {
            for_each_in_box({6, 6}, [&](const Index& n) { seen[w].push_back(shared(n)); });
        });
    for (auto& t : pool) t.join();
    std::vector<Rational> expected;
    for_each_in_box({6, 6}, [&](const Index& n) { expected.push_back(serial(n)); });
    for (const auto& s : seen) CHECK(s == expected);
}
