#pragma once

#include <cstdint>
#include <span>

#include "mhsum/rational.hpp"

namespace mhsum {

/// n choose k; zero when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

/// n! / (parts[0]! * parts[1]! * ...).
/// Throws std::invalid_argument unless the parts sum to n.
Integer multinomial(std::uint64_t n, std::span<const std::uint64_t> parts);

/// Generalized binomial coefficient top(top-1)...(top-k+1) / k! for a
/// rational top; 1 when k == 0.
Rational gen_binomial(const Rational& top, std::uint64_t k);

Integer factorial(std::uint64_t n);

}  // namespace mhsum
