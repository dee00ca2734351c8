#include "mhsum/nested_sum.hpp"

#include <numeric>
#include <stdexcept>

#include "mhsum/combinatorics.hpp"

namespace mhsum {

namespace {

std::string join(const ParamVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].to_string();
    }
    return out;
}

Rational monomial(const ParamVector& x, const std::vector<std::uint64_t>& exponents) {
    Rational out(1);
    for (std::size_t j = 0; j < x.size(); ++j) out *= pow(x[j], exponents[j]);
    return out;
}

}  // namespace

bool is_nonpositive_integer(const Rational& t) { return t.is_integer() && t.sign() <= 0; }

NestedSumSpec::NestedSumSpec(std::vector<ParamVector> xblocks, ParamVector shifts)
    : xblocks_(std::move(xblocks)), shifts_(std::move(shifts)) {
    if (xblocks_.empty()) throw std::invalid_argument("nested sum needs at least one x-block");
    const std::size_t p = xblocks_.front().size();
    if (p == 0) throw std::invalid_argument("x-blocks must be nonempty");
    for (const auto& block : xblocks_)
        if (block.size() != p)
            throw std::invalid_argument("all x-blocks must have the same length (" + std::to_string(p) + ")");
    if (shifts_.size() != p - 1)
        throw std::invalid_argument("depth " + std::to_string(p) + " needs " + std::to_string(p - 1) +
                                    " shift parameters, got " + std::to_string(shifts_.size()));
    for (const auto& t : shifts_)
        if (is_nonpositive_integer(t))
            throw std::invalid_argument("shift parameter " + t.to_string() +
                                        " must not be a nonpositive integer");
}

std::string NestedSumSpec::to_string() const {
    std::string out = "x=";
    for (std::size_t i = 0; i < xblocks_.size(); ++i) {
        if (i) out += ';';
        out += join(xblocks_[i]);
    }
    return out + " t=" + join(shifts_);
}

NestedSumSpec reduce_depth(const NestedSumSpec& spec) {
    if (spec.depth() < 2) throw std::invalid_argument("reduce_depth needs depth >= 2");
    std::vector<ParamVector> blocks;
    blocks.reserve(spec.slots());
    for (const auto& b : spec.xblocks()) blocks.emplace_back(b.begin() + 1, b.end());
    return NestedSumSpec(std::move(blocks), ParamVector(spec.shifts().begin() + 1, spec.shifts().end()));
}

NestedSumSpec one_minus(const NestedSumSpec& spec) {
    auto blocks = spec.xblocks();
    for (auto& b : blocks)
        for (auto& v : b) v = Rational(1) - v;
    return NestedSumSpec(std::move(blocks), spec.shifts());
}

NestedSumSpec with_complements(const NestedSumSpec& spec) {
    auto blocks = spec.xblocks();
    const auto complements = one_minus(spec).xblocks();
    blocks.insert(blocks.end(), complements.begin(), complements.end());
    return NestedSumSpec(std::move(blocks), spec.shifts());
}

namespace {

struct ChainTerm {
    Chain heights;
    std::vector<std::uint64_t> gaps;
    Rational weight;  // multinomial(n; gaps) * prod x^gaps
};

}  // namespace

Rational c_direct(const NestedSumSpec& spec, const Index& n, std::uint64_t guard, EvalStats* stats) {
    const std::size_t r = spec.slots();
    const std::size_t p = spec.depth();
    if (n.size() != r)
        throw std::invalid_argument("c_direct: index " + format_index(n) + " does not have " +
                                    std::to_string(r) + " entries");

    Integer families = 1;
    for (auto ni : n) families *= binomial(ni + p - 1, p - 1);
    if (families > Integer(std::to_string(guard)))
        throw GuardExceeded("c_direct: " + families.get_str() + " chain families exceed the guard of " +
                            std::to_string(guard) + "; use the recursive evaluator");

    std::vector<std::vector<ChainTerm>> per_slot(r);
    for (std::size_t i = 0; i < r; ++i) {
        for_each_chain(n[i], p, [&](const Chain& chain) {
            auto gaps = chain_gaps(chain);
            Rational w(multinomial(n[i], gaps));
            w *= monomial(spec.xblocks()[i], gaps);
            per_slot[i].push_back({chain, std::move(gaps), std::move(w)});
        });
    }

    Rational total;
    std::vector<std::size_t> pick(r, 0);
    std::uint64_t summands = 0;
    while (true) {
        Rational numer(1);
        for (std::size_t i = 0; i < r; ++i) numer *= per_slot[i][pick[i]].weight;
        if (!numer.is_zero()) {
            Rational denom(1);
            for (std::size_t j = 0; j + 1 < p; ++j) {
                std::uint64_t level_sum = 0, gap_sum = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    level_sum += per_slot[i][pick[i]].heights[j];
                    gap_sum += per_slot[i][pick[i]].gaps[j];
                }
                const Rational shifted = Rational(level_sum) + spec.shifts()[j];
                denom *= gen_binomial(shifted - Rational(1), gap_sum) * shifted;
            }
            if (denom.is_zero()) throw std::logic_error("c_direct: zero denominator under valid shifts");
            total += numer / denom;
        }
        ++summands;

        std::size_t slot = r;
        while (slot > 0) {
            --slot;
            if (++pick[slot] < per_slot[slot].size()) break;
            pick[slot] = 0;
            if (slot == 0) {
                if (stats) stats->summands += summands;
                return total;
            }
        }
    }
}

RecursiveEvaluator::RecursiveEvaluator(NestedSumSpec spec) {
    levels_.push_back(std::move(spec));
    while (levels_.back().depth() > 1) levels_.push_back(reduce_depth(levels_.back()));
    memo_ = std::vector<WriteOnceCache<Index, Rational, IndexHash>>(levels_.size());
}

Rational RecursiveEvaluator::operator()(const Index& n) const {
    if (n.size() != levels_.front().slots())
        throw std::invalid_argument("c_recursive: index " + format_index(n) + " does not have " +
                                    std::to_string(levels_.front().slots()) + " entries");
    return eval(0, n);
}

std::size_t RecursiveEvaluator::memo_entries() const {
    std::size_t total = 0;
    for (const auto& m : memo_) total += m.size();
    return total;
}

Rational RecursiveEvaluator::eval(std::size_t level, const Index& n) const {
    if (auto hit = memo_[level].find(n)) return *std::move(hit);

    const NestedSumSpec& spec = levels_[level];
    Rational value(1);
    if (spec.depth() == 1) {
        for (std::size_t i = 0; i < n.size(); ++i) value *= pow(spec.x(i, 0), n[i]);
    } else {
        value = eval(level + 1, n);
        Index down = n;
        std::uint64_t total = 0;
        for (std::size_t k = 0; k < n.size(); ++k) {
            total += n[k];
            if (n[k] == 0 || spec.x(k, 0).is_zero()) continue;
            --down[k];
            value += spec.x(k, 0) * Rational(n[k]) * eval(level, down);
            ++down[k];
        }
        value /= Rational(total) + spec.shifts().front();
    }
    return memo_[level].insert(n, std::move(value));
}

Rational c_recursive(const NestedSumSpec& spec, const Index& n, EvalStats* stats) {
    RecursiveEvaluator evaluator(spec);
    Rational value = evaluator(n);
    if (stats) stats->memo_entries += evaluator.memo_entries();
    return value;
}

SequenceRule c_direct_rule(const NestedSumSpec& spec, std::uint64_t guard) {
    return SequenceRule(spec.slots(), [spec, guard](const Index& n) { return c_direct(spec, n, guard); });
}

Rational kt_value(const ParamVector& x, std::uint64_t n) {
    if (x.empty()) throw std::invalid_argument("kt_value needs at least one parameter");
    const std::size_t p = x.size();
    Rational total;
    for_each_chain(n, p, [&](const Chain& chain) {
        Rational term = monomial(x, chain_gaps(chain));
        for (std::size_t j = 0; j + 1 < p; ++j) term /= Rational(chain[j] + 1);
        total += term;
    });
    return total;
}

Rational two_index_value(const ParamVector& x, const ParamVector& y, std::uint64_t n, std::uint64_t k) {
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("two_index_value needs parameter vectors of equal positive length");
    const std::size_t p = x.size();
    const auto xs = enumerate_chains(n, p);
    const auto ys = enumerate_chains(k, p);
    const Rational norm = Rational(1) / Rational(binomial(n + k, n));
    Rational total;
    for (const auto& cn : xs) {
        const auto nu = chain_gaps(cn);
        const Rational xm = monomial(x, nu);
        if (xm.is_zero()) continue;
        for (const auto& ck : ys) {
            const auto kappa = chain_gaps(ck);
            Rational term = norm * xm * monomial(y, kappa);
            for (std::size_t j = 0; j < p; ++j) term *= Rational(binomial(nu[j] + kappa[j], nu[j]));
            for (std::size_t j = 0; j + 1 < p; ++j) term /= Rational(cn[j] + ck[j] + 1);
            total += term;
        }
    }
    return total;
}

}  // namespace mhsum
