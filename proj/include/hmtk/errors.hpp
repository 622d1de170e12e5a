#pragma once

#include <stdexcept>
#include <string>

namespace hmtk {

// Bad mathematical input: point outside the disk, invalid window, bad spec.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A refinement loop failed to reach the requested tolerance. The message
// carries the last two iterates so the caller can judge how far off it was.
struct NumericalError : std::runtime_error {
    NumericalError(const std::string& what, double achieved_, double requested_)
        : std::runtime_error(what), achieved(achieved_), requested(requested_) {}
    double achieved;
    double requested;
};

// NaN produced by a user-supplied field; the message names the location.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hmtk
