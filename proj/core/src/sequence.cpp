#include "mhsum/sequence.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mhsum/combinatorics.hpp"
#include "mhsum/errors.hpp"

namespace mhsum {

std::uint64_t box_size(const std::vector<std::uint64_t>& extents) {
    std::uint64_t total = 1;
    for (auto e : extents) {
        if (e != 0 && total > std::numeric_limits<std::uint64_t>::max() / e)
            return std::numeric_limits<std::uint64_t>::max();
        total *= e;
    }
    return total;
}

void for_each_in_box(const std::vector<std::uint64_t>& extents,
                     const std::function<void(const Index&)>& visit) {
    for (auto e : extents)
        if (e == 0) return;
    Index idx(extents.size(), 0);
    while (true) {
        visit(idx);
        std::size_t axis = extents.size();
        while (axis > 0) {
            --axis;
            if (++idx[axis] < extents[axis]) break;
            idx[axis] = 0;
            if (axis == 0) return;
        }
        if (extents.empty()) return;
    }
}

std::string format_index(const Index& idx) {
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(idx[i]);
    }
    return out + ")";
}

SequenceRule::SequenceRule(std::size_t arity, Eval eval)
    : arity_(arity),
      eval_(std::make_shared<const Eval>(std::move(eval))),
      memo_(std::make_shared<Memo>()) {
    if (arity_ == 0) throw std::invalid_argument("sequence arity must be positive");
}

Rational SequenceRule::operator()(const Index& n) const {
    if (n.size() != arity_)
        throw std::invalid_argument("index " + format_index(n) + " has wrong arity, expected " +
                                    std::to_string(arity_));
    if (auto hit = memo_->find(n)) return *std::move(hit);
    return memo_->insert(n, (*eval_)(n));
}

MultiSequenceTable::MultiSequenceTable(std::vector<std::uint64_t> shape, std::vector<Rational> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != box_size(shape_))
        throw std::invalid_argument("table value count does not match its shape");
}

const Rational& MultiSequenceTable::at(const Index& n) const {
    if (n.size() != shape_.size()) throw std::out_of_range("table index has wrong arity");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] >= shape_[i]) throw std::out_of_range("table index " + format_index(n) + " outside box");
        flat = flat * shape_[i] + n[i];
    }
    return values_[flat];
}

std::string MultiSequenceTable::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < shape_.size(); ++i) os << 'n' << (i + 1) << ',';
    os << "value\n";
    std::size_t flat = 0;
    for_each_in_box(shape_, [&](const Index& n) {
        for (auto v : n) os << v << ',';
        os << values_[flat++].to_string() << '\n';
    });
    return os.str();
}

std::string MultiSequenceTable::to_json() const {
    nlohmann::ordered_json j;
    j["shape"] = shape_;
    auto& vals = j["values"] = nlohmann::ordered_json::array();
    for (const auto& v : values_) vals.push_back(v.to_string());
    return j.dump();
}

SequenceRule delta(const SequenceRule& a, std::size_t axis) {
    if (axis >= a.arity())
        throw std::out_of_range("delta axis " + std::to_string(axis) + " out of range for arity " +
                                std::to_string(a.arity()));
    return SequenceRule(a.arity(), [a, axis](const Index& n) {
        Index up = n;
        ++up[axis];
        return a(n) - a(up);
    });
}

namespace {

// sum_{i <= bound} (-1)^{|i|} prod C(bound_j, i_j) a(offset + i)
Rational alternating_binomial_sum(const SequenceRule& a, const Index& bound, const Index& offset) {
    std::vector<std::uint64_t> extents(bound.size());
    for (std::size_t j = 0; j < bound.size(); ++j) extents[j] = bound[j] + 1;
    Rational total;
    Index point(bound.size());
    for_each_in_box(extents, [&](const Index& i) {
        Integer coeff = 1;
        std::uint64_t parity = 0;
        for (std::size_t j = 0; j < i.size(); ++j) {
            coeff *= binomial(bound[j], i[j]);
            parity += i[j];
            point[j] = offset[j] + i[j];
        }
        const Rational term = Rational(coeff) * a(point);
        if (parity % 2) total -= term;
        else total += term;
    });
    return total;
}

}  // namespace

Rational iterated_delta(const SequenceRule& a, const Index& k, const Index& n) {
    if (k.size() != a.arity() || n.size() != a.arity())
        throw std::invalid_argument("iterated_delta: index arity mismatch");
    return alternating_binomial_sum(a, k, n);
}

SequenceRule nabla(const SequenceRule& a) {
    return SequenceRule(a.arity(), [a](const Index& n) {
        return alternating_binomial_sum(a, n, Index(n.size(), 0));
    });
}

SequenceRule combine(const Rational& alpha, const SequenceRule& a,
                     const Rational& beta, const SequenceRule& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("combine: arity mismatch");
    return SequenceRule(a.arity(), [=](const Index& n) { return alpha * a(n) + beta * b(n); });
}

MultiSequenceTable materialize(const SequenceRule& a, const std::vector<std::uint64_t>& shape,
                               std::uint64_t guard) {
    if (shape.size() != a.arity()) throw std::invalid_argument("materialize: shape arity mismatch");
    for (auto e : shape)
        if (e == 0) throw std::invalid_argument("materialize: extents must be >= 1");
    const auto cells = box_size(shape);
    if (cells > guard)
        throw GuardExceeded("materialize: " + std::to_string(cells) + " cells exceeds guard " +
                            std::to_string(guard));
    std::vector<Rational> values;
    values.reserve(cells);
    for_each_in_box(shape, [&](const Index& n) { values.push_back(a(n)); });
    return MultiSequenceTable(shape, std::move(values));
}

}  // namespace mhsum
