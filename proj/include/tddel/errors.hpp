#pragma once

#include <stdexcept>
#include <string>

namespace tddel {

// Malformed user input or a violated construction invariant.  The CLI maps
// this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematically guaranteed property failed to hold at runtime (e.g. the
// feasibility dichotomy produced neither a solution nor a certificate).
// The CLI maps this to exit code 1.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace tddel
