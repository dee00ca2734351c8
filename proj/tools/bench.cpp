#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <sstream>

namespace mhsum::cli {

namespace {

template <class Fn>
double best_of(unsigned repeats, Fn&& fn) {
    double best = std::numeric_limits<double>::infinity();
    for (unsigned i = 0; i < std::max(1u, repeats); ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

}  // namespace

std::vector<BenchRow> run_bench(const NestedSumSpec& spec, const std::vector<std::uint64_t>& ladder,
                                unsigned repeats, std::uint64_t guard) {
    std::vector<BenchRow> rows;
    for (auto n : ladder) {
        const Index point(spec.slots(), n);
        BenchRow row;
        row.n = n;
        Rational direct, recursive;
        row.direct_seconds = best_of(repeats, [&] {
            EvalStats stats;
            direct = c_direct(spec, point, guard, &stats);
            row.summands = stats.summands;
        });
        row.recursive_seconds = best_of(repeats, [&] {
            EvalStats stats;
            recursive = c_recursive(spec, point, &stats);
            row.memo_entries = stats.memo_entries;
        });
        row.equal = direct == recursive;
        rows.push_back(row);
    }
    return rows;
}

std::string bench_to_csv(const NestedSumSpec& spec, const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "spec,n,direct_seconds,recursive_seconds,speedup,summands,memo_entries,equal\n";
    char buf[64];
    for (const auto& r : rows) {
        os << '"' << spec.to_string() << "\"," << r.n << ',';
        std::snprintf(buf, sizeof buf, "%.9f,%.9f,%.2f", r.direct_seconds, r.recursive_seconds, r.speedup());
        os << buf << ',' << r.summands << ',' << r.memo_entries << ',' << (r.equal ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace mhsum::cli
