#pragma once

#include <stdexcept>

namespace htdet {

/// A request asked an exhaustive routine for more than its configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace htdet
