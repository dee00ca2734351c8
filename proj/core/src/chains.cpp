#include "mhsum/chains.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "mhsum/combinatorics.hpp"

namespace mhsum {

std::uint64_t chain_count(std::uint64_t n, std::uint64_t p) {
    if (p == 0) throw std::invalid_argument("chain length must be positive");
    const Integer count = binomial(n + p - 1, p - 1);
    if (!count.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
    return count.get_ui();
}

namespace {

void descend(Chain& chain, std::size_t pos, const std::function<void(const Chain&)>& visit) {
    if (pos == chain.size()) {
        visit(chain);
        return;
    }
    for (std::uint64_t m = chain[pos - 1] + 1; m-- > 0;) {
        chain[pos] = m;
        descend(chain, pos + 1, visit);
    }
}

}  // namespace

void for_each_chain(std::uint64_t n, std::uint64_t p, const std::function<void(const Chain&)>& visit) {
    if (p == 0) throw std::invalid_argument("chain length must be positive");
    Chain chain(p, 0);
    chain[0] = n;
    descend(chain, 1, visit);
}

std::vector<Chain> enumerate_chains(std::uint64_t n, std::uint64_t p, std::uint64_t guard) {
    const auto count = chain_count(n, p);
    if (count > guard)
        throw GuardExceeded("chain enumeration for n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                            " needs " + std::to_string(count) + " chains, guard is " + std::to_string(guard));
    std::vector<Chain> out;
    out.reserve(count);
    for_each_chain(n, p, [&](const Chain& c) { out.push_back(c); });
    return out;
}

std::vector<std::uint64_t> chain_gaps(const Chain& chain) {
    std::vector<std::uint64_t> gaps(chain.size());
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) gaps[j] = chain[j] - chain[j + 1];
    if (!chain.empty()) gaps.back() = chain.back();
    return gaps;
}

}  // namespace mhsum
