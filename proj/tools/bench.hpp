#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhsum/nested_sum.hpp"

namespace mhsum::cli {

struct BenchRow {
    std::uint64_t n = 0;
    double direct_seconds = 0;
    double recursive_seconds = 0;
    std::uint64_t summands = 0;
    std::uint64_t memo_entries = 0;
    bool equal = false;

    double speedup() const { return recursive_seconds > 0 ? direct_seconds / recursive_seconds : 0; }
};

/// Times one c_direct evaluation against one c_recursive evaluation with a
/// fresh memo at each n of the ladder; the best of `repeats` runs is kept.
std::vector<BenchRow> run_bench(const NestedSumSpec& spec, const std::vector<std::uint64_t>& ladder,
                                unsigned repeats, std::uint64_t guard);

/// "spec,n,direct_seconds,recursive_seconds,speedup,summands,memo_entries,equal"
std::string bench_to_csv(const NestedSumSpec& spec, const std::vector<BenchRow>& rows);

}  // namespace mhsum::cli
