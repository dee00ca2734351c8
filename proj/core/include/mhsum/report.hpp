#pragma once

#include <string>
#include <vector>

#include "mhsum/verify.hpp"

namespace mhsum {

/// Human-readable report: a header line, one line per comparison, a summary.
std::string report_to_text(const Report& report);

/// {"identity", "statement", "subject", "all_equal", "comparisons": [
///    {"identity", "spec", "index", "lhs", "rhs", "equal"}, ...]}
/// Rationals are canonical strings.
std::string report_to_json(const Report& report);

/// {"all_equal", "failures", "reports": [<report_to_json objects>]}
std::string reports_to_json(const std::vector<Report>& reports);

/// Header "identity,spec,index,lhs,rhs,equal" then one row per comparison.
std::string report_to_csv(const Report& report, bool header = true);

}  // namespace mhsum
