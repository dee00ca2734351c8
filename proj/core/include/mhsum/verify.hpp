#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mhsum/chains.hpp"
#include "mhsum/index.hpp"
#include "mhsum/mhs.hpp"
#include "mhsum/nested_sum.hpp"
#include "mhsum/rational.hpp"

namespace mhsum {

struct Comparison {
    Index index;
    Rational lhs;
    Rational rhs;

    bool equal() const { return lhs == rhs; }
};

/// Outcome of checking one identity at every point of a box. Failures are
/// recorded as unequal comparisons, never thrown.
struct Report {
    std::string identity;   // short id, e.g. "c-duality"
    std::string statement;  // the identity being checked, in words
    std::string subject;    // spec or multi-index text
    std::vector<Comparison> comparisons;

    bool all_equal() const;
    std::size_t failures() const;
};

struct SweepOptions {
    std::uint64_t guard = kDefaultSummandGuard;
    /// Worker threads for the point sweep; output order never depends on it.
    unsigned workers = 1;
};

/// nabla(c_spec)(n) == c_{1-x}(n) for every n in the box [0, extents).
Report verify_duality(const NestedSumSpec& spec, const std::vector<std::uint64_t>& box,
                      const SweepOptions& options = {});

/// (Delta^k c_spec)(n) == c_{x;1-x}(n, k) for n in nbox, k in kbox.
/// Each comparison's index is n followed by k.
Report verify_difference_formula(const NestedSumSpec& spec, const std::vector<std::uint64_t>& nbox,
                                 const std::vector<std::uint64_t>& kbox, const SweepOptions& options = {});

/// sum_{i in subset} c(n + e_i) == shift * c(n) on the box. Slots are
/// 0-based. Throws std::invalid_argument unless the x-blocks of the subset
/// sum to (shift, ..., shift) or the subset has repeats/out-of-range slots.
Report verify_shift_identity(const NestedSumSpec& spec, const std::vector<std::size_t>& subset,
                             const Rational& shift, const std::vector<std::uint64_t>& box,
                             const SweepOptions& options = {});

/// Depth-reduction recurrence against direct enumeration on the box.
Report verify_recurrence(const NestedSumSpec& spec, const std::vector<std::uint64_t>& box,
                         const SweepOptions& options = {});

/// sum_k (-1)^k C(n,k) s_mu(k) == s_{mu*}(n) for n = 0..nmax.
Report verify_mhs_duality(const MultiIndex& mu, std::uint64_t nmax);

/// Uniform box with extent nmax+1 on each of `arity` axes.
std::vector<std::uint64_t> uniform_box(std::size_t arity, std::uint64_t nmax);

}  // namespace mhsum
