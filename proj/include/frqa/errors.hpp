#pragma once

#include <stdexcept>
#include <string>

namespace frqa {

// Value outside its documented interval.
class RangeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Incompatible widths, lengths, or register layouts.
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Missing ancillas, dirty wires, or a simulation width over the cap.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A state that does not carry one amplitude pattern per time index.
class NotFrqaShapedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Circuit output disagreed with the classical reference.
class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace frqa
