#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mhsum/chains.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/sequence.hpp"

namespace mhsum {

/// Ordered tuple of positive integers (mu_1, ..., mu_p), p >= 1.
class MultiIndex {
public:
    /// Throws std::invalid_argument when empty or when a part is zero.
    explicit MultiIndex(std::vector<std::uint64_t> parts);

    /// Parses "(1,2,3)"; whitespace around entries is ignored.
    static MultiIndex parse(std::string_view text);

    const std::vector<std::uint64_t>& parts() const { return parts_; }
    std::size_t depth() const { return parts_.size(); }
    std::uint64_t weight() const { return weight_; }

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t weight_ = 0;
};

/// All multi-indices of the given weight (the 2^{w-1} compositions of w),
/// ordered by the partial-sum bitmask.
std::vector<MultiIndex> multi_indices_of_weight(std::uint64_t weight);

/// s_mu(n) by direct enumeration of chains n = n_1 >= ... >= n_p >= 0.
/// Throws GuardExceeded past `guard` chains.
Rational mhs_value(const MultiIndex& mu, std::uint64_t n, std::uint64_t guard = kDefaultSummandGuard);

/// n -> s_mu(n) as a unary sequence rule.
SequenceRule mhs_sequence(const MultiIndex& mu, std::uint64_t guard = kDefaultSummandGuard);

/// Dual index: complement the partial sums {mu_1, mu_1+mu_2, ...} inside
/// {1, ..., w-1} and read the complement back as a composition of w.
MultiIndex dual_index(const MultiIndex& mu);

/// sum_{k=0}^{n} (-1)^k C(n,k) s_mu(k), computed through nabla.
Rational duality_lhs(const MultiIndex& mu, std::uint64_t n);

/// (0^{mu_1-1}, 1, ..., 0^{mu_p-1}, 1, 0): KT parameters reproducing s_mu.
std::vector<Rational> embed_type1(const MultiIndex& mu);

/// (0^{mu_1-1}, 1, ..., 0^{mu_{p-1}-1}, 1, 0^{mu_p}, 1): the other embedding.
std::vector<Rational> embed_type2(const MultiIndex& mu);

}  // namespace mhsum
