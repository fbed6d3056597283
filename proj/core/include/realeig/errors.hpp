#pragma once

#include <stdexcept>

namespace realeig {

/// Random coordinate changes failed to reach a generic position.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a precondition that is not a programming error
/// (for example a singular curve passed to the topology sweep).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace realeig
