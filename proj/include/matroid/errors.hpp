#pragma once

#include <stdexcept>
#include <string>

namespace matroid {

/// Malformed arguments or input documents (bad indices, non-antichains, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A circuit family that violates the elimination axiom.
class InvalidMatroid : public InputError {
 public:
  using InputError::InputError;
};

/// A construction whose preconditions fail (loop/coloop basepoints, rank-0 free extension).
class ConstructionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace matroid
