#include "mhsum/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mhsum {

std::string report_to_text(const Report& report) {
    std::ostringstream os;
    os << "[" << report.identity << "] " << report.statement << "\n";
    os << "  subject: " << report.subject << "\n";
    for (const auto& c : report.comparisons) {
        os << "  " << format_index(c.index) << ": " << c.lhs << (c.equal() ? " == " : " != ") << c.rhs
           << (c.equal() ? "  ok" : "  FAIL") << "\n";
    }
    os << "  " << (report.comparisons.size() - report.failures()) << "/" << report.comparisons.size()
       << " comparisons equal\n";
    return os.str();
}

namespace {

nlohmann::ordered_json report_json(const Report& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["statement"] = report.statement;
    j["subject"] = report.subject;
    j["all_equal"] = report.all_equal();
    auto& rows = j["comparisons"] = nlohmann::ordered_json::array();
    for (const auto& c : report.comparisons) {
        nlohmann::ordered_json row;
        row["identity"] = report.identity;
        row["spec"] = report.subject;
        row["index"] = c.index;
        row["lhs"] = c.lhs.to_string();
        row["rhs"] = c.rhs.to_string();
        row["equal"] = c.equal();
        rows.push_back(std::move(row));
    }
    return j;
}

}  // namespace

std::string report_to_json(const Report& report) { return report_json(report).dump(2); }

std::string reports_to_json(const std::vector<Report>& reports) {
    nlohmann::ordered_json j;
    std::size_t failures = 0;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        failures += r.failures();
        arr.push_back(report_json(r));
    }
    j["all_equal"] = failures == 0;
    j["failures"] = failures;
    j["reports"] = std::move(arr);
    return j.dump(2);
}

std::string report_to_csv(const Report& report, bool header) {
    std::ostringstream os;
    if (header) os << "identity,spec,index,lhs,rhs,equal\n";
    for (const auto& c : report.comparisons) {
        os << report.identity << ",\"" << report.subject << "\",\"" << format_index(c.index) << "\"," << c.lhs
           << ',' << c.rhs << ',' << (c.equal() ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace mhsum
