#include "mhsum/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mhsum {

bool Report::all_equal() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.equal(); }));
}

std::vector<std::uint64_t> uniform_box(std::size_t arity, std::uint64_t nmax) {
    return std::vector<std::uint64_t>(arity, nmax + 1);
}

namespace {

std::vector<Index> points_of(const std::vector<std::uint64_t>& box) {
    std::vector<Index> points;
    for_each_in_box(box, [&](const Index& n) { points.push_back(n); });
    return points;
}

// Fills one comparison per point; workers take interleaved points and
// write into their own slots, so the result order is the point order.
std::vector<Comparison> sweep(const std::vector<Index>& points, unsigned workers,
                              const std::function<Comparison(const Index&)>& compare) {
    std::vector<Comparison> out(points.size());
    const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(points.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = compare(points[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < points.size(); i += threads) out[i] = compare(points[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

Index concat(const Index& a, const Index& b) {
    Index out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void check_box(const std::vector<std::uint64_t>& box, std::size_t arity, const char* what) {
    if (box.size() != arity)
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(box.size()) +
                                    " extents, expected " + std::to_string(arity));
}

}  // namespace

Report verify_duality(const NestedSumSpec& spec, const std::vector<std::uint64_t>& box,
                      const SweepOptions& options) {
    check_box(box, spec.slots(), "box");
    const auto inverted = nabla(c_direct_rule(spec, options.guard));
    const auto dual = one_minus(spec);
    Report report{"c-duality", "nabla c_{x_1;...;x_r} = c_{1-x_1;...;1-x_r}", spec.to_string(), {}};
    report.comparisons = sweep(points_of(box), options.workers, [&](const Index& n) {
        return Comparison{n, inverted(n), c_direct(dual, n, options.guard)};
    });
    return report;
}

Report verify_difference_formula(const NestedSumSpec& spec, const std::vector<std::uint64_t>& nbox,
                                 const std::vector<std::uint64_t>& kbox, const SweepOptions& options) {
    check_box(nbox, spec.slots(), "n-box");
    check_box(kbox, spec.slots(), "k-box");
    const auto c = c_direct_rule(spec, options.guard);
    const auto doubled = with_complements(spec);
    Report report{"difference-formula",
                  "(Delta_1^{k_1}...Delta_r^{k_r} c_{x})(n) = c_{x_1;...;x_r;1-x_1;...;1-x_r}(n, k)",
                  spec.to_string(),
                  {}};
    std::vector<Index> points;
    for (const auto& n : points_of(nbox))
        for (const auto& k : points_of(kbox)) points.push_back(concat(n, k));
    const std::size_t r = spec.slots();
    report.comparisons = sweep(points, options.workers, [&](const Index& nk) {
        const Index n(nk.begin(), nk.begin() + static_cast<std::ptrdiff_t>(r));
        const Index k(nk.begin() + static_cast<std::ptrdiff_t>(r), nk.end());
        return Comparison{nk, iterated_delta(c, k, n), c_direct(doubled, nk, options.guard)};
    });
    return report;
}

Report verify_shift_identity(const NestedSumSpec& spec, const std::vector<std::size_t>& subset,
                             const Rational& shift, const std::vector<std::uint64_t>& box,
                             const SweepOptions& options) {
    check_box(box, spec.slots(), "box");
    if (subset.empty()) throw std::invalid_argument("shift identity needs a nonempty slot subset");
    std::vector<bool> seen(spec.slots(), false);
    for (auto i : subset) {
        if (i >= spec.slots()) throw std::invalid_argument("slot " + std::to_string(i) + " out of range");
        if (seen[i]) throw std::invalid_argument("slot " + std::to_string(i) + " repeated in subset");
        seen[i] = true;
    }
    for (std::size_t j = 0; j < spec.depth(); ++j) {
        Rational sum;
        for (auto i : subset) sum += spec.x(i, j);
        if (sum != shift)
            throw std::invalid_argument("subset x-blocks sum to " + sum.to_string() + " at component " +
                                        std::to_string(j + 1) + ", expected " + shift.to_string());
    }

    const auto c = c_direct_rule(spec, options.guard);
    Report report{"shift", "(sum_{i in S} d/dX_i - c) f_{x} = 0 when sum_{i in S} x_i = (c,...,c)",
                  spec.to_string(), {}};
    report.comparisons = sweep(points_of(box), options.workers, [&](const Index& n) {
        Rational lhs;
        Index up = n;
        for (auto i : subset) {
            ++up[i];
            lhs += c(up);
            --up[i];
        }
        return Comparison{n, lhs, shift * c(n)};
    });
    return report;
}

Report verify_recurrence(const NestedSumSpec& spec, const std::vector<std::uint64_t>& box,
                         const SweepOptions& options) {
    check_box(box, spec.slots(), "box");
    const RecursiveEvaluator recursive(spec);
    Report report{"recurrence", "(|n| + t_1) c(n) - sum_k x_k1 n_k c(n - e_k) = c^-(n)", spec.to_string(), {}};
    report.comparisons = sweep(points_of(box), options.workers, [&](const Index& n) {
        return Comparison{n, recursive(n), c_direct(spec, n, options.guard)};
    });
    return report;
}

Report verify_mhs_duality(const MultiIndex& mu, std::uint64_t nmax) {
    const auto dual = dual_index(mu);
    const auto inverted = nabla(mhs_sequence(mu));
    Report report{"mhs-duality", "sum_k (-1)^k C(n,k) s_mu(k) = s_{mu*}(n), mu* = " + dual.to_string(),
                  mu.to_string(), {}};
    for (std::uint64_t n = 0; n <= nmax; ++n)
        report.comparisons.push_back({{n}, inverted({n}), mhs_value(dual, n)});
    return report;
}

}  // namespace mhsum
