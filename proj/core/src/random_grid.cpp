#include "mhsum/random_grid.hpp"

#include <stdexcept>

namespace mhsum {

std::uint64_t GridRandom::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("GridRandom::below needs a positive bound");
    return engine_() % bound;
}

Rational GridRandom::small_rational() {
    const long num = static_cast<long>(below(19)) - 9;
    const long den = static_cast<long>(below(9)) + 1;
    return Rational(num, den);
}

Rational GridRandom::shift() {
    while (true) {
        Rational t = small_rational();
        if (!is_nonpositive_integer(t)) return t;
    }
}

NestedSumSpec GridRandom::spec(std::size_t slots, std::size_t depth) {
    std::vector<ParamVector> blocks(slots, ParamVector(depth));
    for (auto& block : blocks)
        for (auto& v : block) v = small_rational();
    ParamVector shifts(depth - 1);
    for (auto& t : shifts) t = shift();
    return NestedSumSpec(std::move(blocks), std::move(shifts));
}

NestedSumSpec GridRandom::spec_up_to(std::size_t max_slots, std::size_t max_depth) {
    const auto slots = 1 + static_cast<std::size_t>(below(max_slots));
    const auto depth = 1 + static_cast<std::size_t>(below(max_depth));
    return spec(slots, depth);
}

NestedSumSpec GridRandom::spec_with_constant_sum(std::size_t slots, std::size_t depth,
                                                const std::vector<std::size_t>& subset, const Rational& total) {
    if (subset.empty()) throw std::invalid_argument("constant-sum subset must be nonempty");
    const NestedSumSpec base = spec(slots, depth);
    auto blocks = base.xblocks();
    const std::size_t last = subset.back();
    for (std::size_t j = 0; j < depth; ++j) {
        Rational rest;
        for (std::size_t s = 0; s + 1 < subset.size(); ++s) rest += blocks.at(subset[s])[j];
        blocks.at(last)[j] = total - rest;
    }
    return NestedSumSpec(std::move(blocks), base.shifts());
}

SequenceRule random_sequence(std::size_t arity, std::uint64_t seed) {
    return SequenceRule(arity, [seed](const Index& n) {
        std::uint64_t h = seed * 0x9e3779b97f4a7c15ULL + 1;
        for (auto v : n) h = (h ^ (v + 0x632be59bd9b4e019ULL)) * 0xff51afd7ed558ccdULL;
        GridRandom rng(h);
        return rng.small_rational();
    });
}

}  // namespace mhsum
