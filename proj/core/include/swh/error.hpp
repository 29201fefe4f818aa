#pragma once

#include <stdexcept>

namespace swh {

// Invalid input or a violated precondition of a public operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series, quadrature or search did not reach its tolerance before its cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swh
