#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mhsum/index.hpp"
#include "mhsum/nested_sum.hpp"

namespace mhsum {

// Parsers for the command-line text forms. All throw std::invalid_argument
// with a message naming the offending input.

/// "1/2,-3,0" -> rationals. An empty string yields an empty list.
ParamVector parse_rational_list(std::string_view text);

/// "1/2,1/3;0,1" -> one parameter vector per slot.
std::vector<ParamVector> parse_xblocks(std::string_view text);

/// "2,1" -> naturals.
std::vector<std::uint64_t> parse_natural_list(std::string_view text);

/// Builds and validates a spec from the --x and --t texts.
NestedSumSpec parse_spec(std::string_view xblocks, std::string_view shifts);

}  // namespace mhsum
