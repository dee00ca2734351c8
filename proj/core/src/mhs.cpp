#include "mhsum/mhs.hpp"

#include <cctype>
#include <stdexcept>

namespace mhsum {

MultiIndex::MultiIndex(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("multi-index must have at least one part");
    for (auto m : parts_) {
        if (m == 0) throw std::invalid_argument("multi-index parts must be positive");
        weight_ += m;
    }
}

MultiIndex MultiIndex::parse(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("malformed multi-index '" + std::string(text) + "', expected e.g. (1,2,3)"); };
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw fail();
    s = s.substr(1, s.size() - 2);

    std::vector<std::uint64_t> parts;
    while (true) {
        const auto comma = s.find(',');
        std::string_view item = s.substr(0, comma);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.empty() || item.size() > 18) throw fail();
        std::uint64_t value = 0;
        for (char ch : item) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
            value = value * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return MultiIndex(std::move(parts));
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<MultiIndex> multi_indices_of_weight(std::uint64_t weight) {
    if (weight == 0 || weight > 40) throw std::invalid_argument("weight must be in 1..40");
    std::vector<MultiIndex> out;
    const std::uint64_t cuts = weight - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cuts); ++mask) {
        std::vector<std::uint64_t> parts;
        std::uint64_t last = 0;
        for (std::uint64_t pos = 1; pos <= cuts; ++pos) {
            if (mask & (std::uint64_t{1} << (pos - 1))) {
                parts.push_back(pos - last);
                last = pos;
            }
        }
        parts.push_back(weight - last);
        out.emplace_back(std::move(parts));
    }
    return out;
}

Rational mhs_value(const MultiIndex& mu, std::uint64_t n, std::uint64_t guard) {
    const auto p = mu.depth();
    const auto count = chain_count(n, p);
    if (count > guard)
        throw GuardExceeded("s" + mu.to_string() + "(" + std::to_string(n) + ") needs " + std::to_string(count) +
                            " chains, guard is " + std::to_string(guard));
    Rational total;
    for_each_chain(n, p, [&](const Chain& chain) {
        Integer denom = 1;
        for (std::size_t j = 0; j < p; ++j) {
            Integer factor;
            mpz_ui_pow_ui(factor.get_mpz_t(), chain[j] + 1, mu.parts()[j]);
            denom *= factor;
        }
        total += Rational(Integer(1), denom);
    });
    return total;
}

SequenceRule mhs_sequence(const MultiIndex& mu, std::uint64_t guard) {
    return SequenceRule(1, [mu, guard](const Index& n) { return mhs_value(mu, n[0], guard); });
}

MultiIndex dual_index(const MultiIndex& mu) {
    const auto w = mu.weight();
    std::vector<bool> is_partial_sum(w, false);
    std::uint64_t running = 0;
    for (std::size_t j = 0; j + 1 < mu.depth(); ++j) {
        running += mu.parts()[j];
        is_partial_sum[running] = true;
    }
    std::vector<std::uint64_t> parts;
    std::uint64_t last = 0;
    for (std::uint64_t pos = 1; pos < w; ++pos) {
        if (is_partial_sum[pos]) continue;
        parts.push_back(pos - last);
        last = pos;
    }
    parts.push_back(w - last);
    return MultiIndex(std::move(parts));
}

Rational duality_lhs(const MultiIndex& mu, std::uint64_t n) { return nabla(mhs_sequence(mu))({n}); }

std::vector<Rational> embed_type1(const MultiIndex& mu) {
    std::vector<Rational> out;
    out.reserve(mu.weight() + 1);
    for (auto m : mu.parts()) {
        out.insert(out.end(), m - 1, Rational(0));
        out.emplace_back(1);
    }
    out.emplace_back(0);
    return out;
}

std::vector<Rational> embed_type2(const MultiIndex& mu) {
    std::vector<Rational> out;
    out.reserve(mu.weight() + 1);
    const auto& parts = mu.parts();
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        out.insert(out.end(), parts[j] - 1, Rational(0));
        out.emplace_back(1);
    }
    out.insert(out.end(), parts.back(), Rational(0));
    out.emplace_back(1);
    return out;
}

}  // namespace mhsum
