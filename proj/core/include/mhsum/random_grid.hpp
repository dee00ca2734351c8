#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mhsum/nested_sum.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/sequence.hpp"

namespace mhsum {

/// Seeded source of small rational parameters. Numerators lie in [-9, 9] and
/// denominators in [1, 9]; a given seed yields the same draws on every
/// platform.
class GridRandom {
public:
    explicit GridRandom(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

    Rational small_rational();

    /// A small rational that is not 0, -1, -2, ...; may be a negative
    /// non-integer such as -3/2.
    Rational shift();

    /// Random spec with exactly r slots and depth p.
    NestedSumSpec spec(std::size_t slots, std::size_t depth);

    /// Random spec with 1..max_slots slots and depth 1..max_depth.
    NestedSumSpec spec_up_to(std::size_t max_slots, std::size_t max_depth);

    /// Random spec in which the x-blocks of `subset` (0-based, distinct)
    /// sum componentwise to (total, ..., total).
    NestedSumSpec spec_with_constant_sum(std::size_t slots, std::size_t depth,
                                         const std::vector<std::size_t>& subset, const Rational& total);

private:
    std::mt19937_64 engine_;
};

/// A total rule on N^arity whose value at each point is a small rational
/// drawn from a generator seeded by (seed, point).
SequenceRule random_sequence(std::size_t arity, std::uint64_t seed);

}  // namespace mhsum
