#include "mhsum/text_syntax.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace mhsum {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) return out;
        s.remove_prefix(pos + 1);
    }
}

}  // namespace

ParamVector parse_rational_list(std::string_view text) {
    ParamVector out;
    if (trim(text).empty()) return out;
    for (auto item : split(text, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + std::string(text) + "'");
        out.push_back(Rational::parse(item));
    }
    return out;
}

std::vector<ParamVector> parse_xblocks(std::string_view text) {
    if (trim(text).empty()) throw std::invalid_argument("x-blocks must not be empty");
    std::vector<ParamVector> out;
    for (auto block : split(text, ';')) {
        auto values = parse_rational_list(block);
        if (values.empty()) throw std::invalid_argument("empty x-block in '" + std::string(text) + "'");
        out.push_back(std::move(values));
    }
    return out;
}

std::vector<std::uint64_t> parse_natural_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    if (trim(text).empty()) throw std::invalid_argument("expected a comma-separated list of naturals");
    for (auto item : split(text, ',')) {
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("'" + std::string(item) + "' is not a natural number");
        out.push_back(value);
    }
    return out;
}

NestedSumSpec parse_spec(std::string_view xblocks, std::string_view shifts) {
    return NestedSumSpec(parse_xblocks(xblocks), parse_rational_list(shifts));
}

}  // namespace mhsum
