#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mhsum/chains.hpp"

namespace mhsum::cli {

enum class Command { value, dual, embed, c, verify, bench };
enum class Identity { mhs_duality, c_duality, difference_formula, recurrence, shift, egf_suite };
enum class Format { text, json, csv };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

struct RunConfig {
    Command command = Command::value;
    Identity identity = Identity::c_duality;

    std::optional<std::string> mu;
    std::optional<std::string> x;
    std::string t;
    std::optional<std::string> n;  // single natural, or comma list for `c`
    std::optional<std::uint64_t> nmax;
    std::optional<std::string> box;  // extents, e.g. "4,3"
    std::optional<std::uint64_t> kmax;
    std::optional<std::string> kbox;
    std::optional<std::string> subset;  // 1-based slots
    std::string shift = "1";
    std::string method = "direct";

    Format format = Format::text;
    std::uint64_t seed = 1;
    std::uint64_t guard = kDefaultSummandGuard;
    std::uint32_t degree = 6;
    std::uint64_t count = 20;
    std::uint64_t weight = 6;
    std::size_t depth = 3;
    std::optional<std::string> ladder;
    unsigned repeats = 3;
    unsigned workers = 1;
};

/// Parses argv-style arguments (without the program name) and runs them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
///   0  every checked identity instance holds
///   1  some instance failed (each failure is listed on `err`)
///   2  invalid input
///   3  a size guard was exceeded
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mhsum::cli
