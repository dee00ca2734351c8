#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mhsum/errors.hpp"

namespace mhsum {

/// Default cap on summands / chains for direct enumeration.
inline constexpr std::uint64_t kDefaultSummandGuard = 10'000'000;

/// A weakly decreasing chain n = m_1 >= m_2 >= ... >= m_p >= 0.
using Chain = std::vector<std::uint64_t>;

/// C(n+p-1, p-1), saturating at UINT64_MAX.
std::uint64_t chain_count(std::uint64_t n, std::uint64_t p);

/// Visits every chain headed by n of length p exactly once, in descending
/// lexicographic order: for n=1, p=2 the order is (1,1), (1,0).
void for_each_chain(std::uint64_t n, std::uint64_t p, const std::function<void(const Chain&)>& visit);

/// All chains, same order as for_each_chain.
/// Throws GuardExceeded when there are more than `guard` of them.
std::vector<Chain> enumerate_chains(std::uint64_t n, std::uint64_t p,
                                    std::uint64_t guard = kDefaultSummandGuard);

/// Consecutive gaps nu_j = m_j - m_{j+1}, with nu_p = m_p. They sum to m_1.
std::vector<std::uint64_t> chain_gaps(const Chain& chain);

}  // namespace mhsum
