#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mhsum/index.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/write_once_cache.hpp"

namespace mhsum {

/// Default cap on the number of cells a materialization may allocate.
inline constexpr std::uint64_t kDefaultCellGuard = 10'000'000;

/// A multi-sequence N^r -> Q given by a deterministic rule.
///
/// Copies share the rule and its memo, so a rule can be passed by value into
/// derived rules (delta, nabla, ...) without re-evaluating cached points.
/// Evaluation is safe from several threads at once.
class SequenceRule {
public:
    using Eval = std::function<Rational(const Index&)>;

    SequenceRule(std::size_t arity, Eval eval);

    std::size_t arity() const { return arity_; }

    /// Throws std::invalid_argument if n.size() != arity().
    Rational operator()(const Index& n) const;

    std::size_t cached_entries() const { return memo_->size(); }

private:
    using Memo = WriteOnceCache<Index, Rational, IndexHash>;

    std::size_t arity_;
    std::shared_ptr<const Eval> eval_;
    std::shared_ptr<Memo> memo_;
};

/// Dense values of a rule on the box [0..N_1] x ... x [0..N_r], row-major.
class MultiSequenceTable {
public:
    MultiSequenceTable(std::vector<std::uint64_t> shape, std::vector<Rational> values);

    std::size_t arity() const { return shape_.size(); }
    const std::vector<std::uint64_t>& shape() const { return shape_; }
    const std::vector<Rational>& values() const { return values_; }

    /// Throws std::out_of_range outside the box.
    const Rational& at(const Index& n) const;

    /// Index columns n1..nr followed by the value string, one row per cell.
    std::string to_csv() const;
    /// {"shape": [...], "values": ["p/q", ...]} in row-major order.
    std::string to_json() const;

private:
    std::vector<std::uint64_t> shape_;
    std::vector<Rational> values_;
};

/// (delta_axis a)(n) = a(n) - a(n + e_axis). Axis is 0-based.
/// Throws std::out_of_range if axis >= a.arity().
SequenceRule delta(const SequenceRule& a, std::size_t axis);

/// (Delta_1^{k_1} ... Delta_r^{k_r} a)(n) via the alternating binomial sum
///   sum_{i <= k} (-1)^{|i|} C(k_1,i_1)...C(k_r,i_r) a(n + i).
Rational iterated_delta(const SequenceRule& a, const Index& k, const Index& n);

/// Binomial transform: (nabla a)(n) = sum_{i <= n} (-1)^{|i|} prod C(n_j,i_j) a(i).
SequenceRule nabla(const SequenceRule& a);

/// alpha*a + beta*b pointwise. Arity must match.
SequenceRule combine(const Rational& alpha, const SequenceRule& a,
                     const Rational& beta, const SequenceRule& b);

/// Evaluates a on the box with the given extents, lexicographic order.
/// Throws std::invalid_argument on a zero extent or arity mismatch, and
/// GuardExceeded when the box has more than `guard` cells.
MultiSequenceTable materialize(const SequenceRule& a, const std::vector<std::uint64_t>& shape,
                               std::uint64_t guard = kDefaultCellGuard);

}  // namespace mhsum
