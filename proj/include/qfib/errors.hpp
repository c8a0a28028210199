#pragma once

#include <stdexcept>

namespace qfib {

/// Thrown when an operation would exceed its configured memory or search
/// budget (CLI maps this to exit code 3).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qfib
