#pragma once

#include <stdexcept>
#include <string>

namespace mhsum {

/// A computation would exceed its configured size limit (summands, chains
/// or table cells).
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mhsum
