#pragma once

// Test-only sequence fixtures.

#include <cstdint>

#include "mhsum/random_grid.hpp"
#include "mhsum/sequence.hpp"

namespace mhsum::testing {

inline SequenceRule random_rule(std::size_t arity, std::uint64_t seed) { return random_sequence(arity, seed); }

inline SequenceRule geometric_rule(const Rational& base) {
    return SequenceRule(1, [base](const Index& n) { return pow(base, n[0]); });
}

inline SequenceRule constant_rule(std::size_t arity, const Rational& value) {
    return SequenceRule(arity, [value](const Index&) { return value; });
}

}  // namespace mhsum::testing
