#pragma once

#include <stdexcept>
#include <string>

namespace cbmw {

// Arithmetic that cannot be performed exactly: division by zero, a
// denominator vanishing at an evaluation point, inverting a non-unit.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter sets the theory excludes (u_i = 0, q^2 = 1, u_i u_j = 1, ...).
// The CLI maps these to a dedicated exit code.
struct ExcludedConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity violated an identity the underlying lemmas guarantee.
// Never caught and papered over; it means a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cbmw
