#include "mhsum/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace mhsum {

Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(std::uint64_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer multinomial(std::uint64_t n, std::span<const std::uint64_t> parts) {
    std::uint64_t sum = 0;
    for (auto part : parts) sum += part;
    if (sum != n)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(n));
    // Product of successive binomials avoids forming n! and dividing.
    Integer out = 1;
    std::uint64_t running = 0;
    for (auto part : parts) {
        running += part;
        out *= binomial(running, part);
    }
    return out;
}

Rational gen_binomial(const Rational& top, std::uint64_t k) {
    if (k == 0) return Rational(1);
    Rational falling(1);
    for (std::uint64_t i = 0; i < k; ++i) falling *= top - Rational(i);
    return falling / Rational(factorial(k));
}

}  // namespace mhsum
