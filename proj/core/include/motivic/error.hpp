#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

/// Raised when a value violates one of its structural invariants. The message
/// names the invariant.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on incompatible shapes (matrix dimensions, map domains, group mismatch).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace motivic
