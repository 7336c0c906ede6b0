#pragma once

#include <stdexcept>
#include <string>

namespace infsing {

/// Input outside the supported class (positive-dimensional loci, irrational
/// points, degree drop, n >= 4 where a formula needs n <= 3).
class UnsupportedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PositiveDimensional : public UnsupportedInput {
public:
    using UnsupportedInput::UnsupportedInput;
};

/// Two independent computations of the same quantity disagree.
class Inconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace infsing
