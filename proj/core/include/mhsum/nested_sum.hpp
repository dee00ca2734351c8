#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mhsum/chains.hpp"
#include "mhsum/index.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/sequence.hpp"
#include "mhsum/write_once_cache.hpp"

namespace mhsum {

using ParamVector = std::vector<Rational>;

/// Parameters of the r-slot, depth-p nested sum c^{t_1..t_{p-1}}_{x_1;...;x_r}.
///
/// Invariants (checked on construction, std::invalid_argument otherwise):
/// r >= 1, every x-block has the same length p >= 1, there are exactly p-1
/// shifts, and no shift is a nonpositive integer.
class NestedSumSpec {
public:
    NestedSumSpec(std::vector<ParamVector> xblocks, ParamVector shifts);

    std::size_t slots() const { return xblocks_.size(); }
    std::size_t depth() const { return xblocks_.front().size(); }

    const std::vector<ParamVector>& xblocks() const { return xblocks_; }
    const ParamVector& shifts() const { return shifts_; }
    const Rational& x(std::size_t slot, std::size_t level) const { return xblocks_[slot][level]; }

    /// Same text syntax the CLI accepts: "x=1/2,1/3;0,1 t=2".
    std::string to_string() const;

    friend bool operator==(const NestedSumSpec&, const NestedSumSpec&) = default;

private:
    std::vector<ParamVector> xblocks_;
    ParamVector shifts_;
};

/// True when t is 0, -1, -2, ...
bool is_nonpositive_integer(const Rational& t);

/// Drops the first component of every x-block and the first shift.
/// Throws std::invalid_argument at depth 1.
NestedSumSpec reduce_depth(const NestedSumSpec& spec);

/// Replaces every x_ij by 1 - x_ij.
NestedSumSpec one_minus(const NestedSumSpec& spec);

/// The 2r-slot spec (x_1; ...; x_r; 1-x_1; ...; 1-x_r) with the same shifts,
/// whose values give the iterated differences of the original.
NestedSumSpec with_complements(const NestedSumSpec& spec);

struct EvalStats {
    std::uint64_t summands = 0;
    std::uint64_t memo_entries = 0;
};

/// Direct chain enumeration of c(n). Chain families are visited slot by slot
/// in descending lexicographic order.
/// Throws GuardExceeded when the family count exceeds `guard` (switch to
/// c_recursive for large n).
Rational c_direct(const NestedSumSpec& spec, const Index& n,
                  std::uint64_t guard = kDefaultSummandGuard, EvalStats* stats = nullptr);

/// Depth-reduction evaluator:
///   c(n) = [ sum_k x_k1 n_k c(n - e_k) + c^-(n) ] / (|n| + t_1),
/// with c^- the reduced-depth spec and c = prod x_i^{n_i} at depth 1.
/// Memoized per (depth level, index); the memo persists across calls and is
/// safe for concurrent use.
class RecursiveEvaluator {
public:
    explicit RecursiveEvaluator(NestedSumSpec spec);

    Rational operator()(const Index& n) const;

    const NestedSumSpec& spec() const { return levels_.front(); }
    std::size_t memo_entries() const;

private:
    Rational eval(std::size_t level, const Index& n) const;

    std::vector<NestedSumSpec> levels_;
    mutable std::vector<WriteOnceCache<Index, Rational, IndexHash>> memo_;
};

/// One-shot recursive evaluation with a fresh memo.
Rational c_recursive(const NestedSumSpec& spec, const Index& n, EvalStats* stats = nullptr);

/// n -> c_direct(spec, n) as a memoized sequence rule of arity r.
SequenceRule c_direct_rule(const NestedSumSpec& spec, std::uint64_t guard = kDefaultSummandGuard);

/// Single-index parametric sum
///   sum over n = n_1 >= ... >= n_p >= 0 of
///   x_1^{n_1-n_2} ... x_{p-1}^{n_{p-1}-n_p} x_p^{n_p} / ((n_1+1)...(n_{p-1}+1)).
Rational kt_value(const ParamVector& x, std::uint64_t n);

/// Two-index sum with binomial weight
///   P = C(n+k,n)^{-1} prod_{j<p} C(nu_j+kappa_j, nu_j) * C(n_p+k_p, n_p)
/// and denominators (n_j + k_j + 1), j < p. x and y must have equal length.
Rational two_index_value(const ParamVector& x, const ParamVector& y, std::uint64_t n, std::uint64_t k);

}  // namespace mhsum
