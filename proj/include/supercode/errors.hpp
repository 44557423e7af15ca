#pragma once

#include <stdexcept>
#include <string>

namespace supercode {

// Shape or length mismatch between operands.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A precondition on the values (not the shapes) does not hold.
struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the fixed size guards.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace supercode
