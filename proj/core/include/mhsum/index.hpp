#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mhsum {

/// A point of N^r.
using Index = std::vector<std::uint64_t>;

struct IndexHash {
    std::size_t operator()(const Index& idx) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ idx.size();
        for (auto v : idx) h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Number of points in the box [0, extents[0]) x ... ; saturates at UINT64_MAX.
std::uint64_t box_size(const std::vector<std::uint64_t>& extents);

/// Visits every point of the box [0, extents[0]) x ... in lexicographic order.
void for_each_in_box(const std::vector<std::uint64_t>& extents,
                     const std::function<void(const Index&)>& visit);

/// "(2,1,0)"
std::string format_index(const Index& idx);

}  // namespace mhsum
