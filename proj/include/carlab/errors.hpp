#pragma once

#include <stdexcept>
#include <string>

namespace carlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated (non-unitary, non-projection, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The mode window is too small for a margin-safe result.
class InsufficientWindow : public Error {
 public:
  InsufficientWindow(int required_n_max, const std::string& what)
      : Error("insufficient window: " + what + " (requires n_max >= " +
              std::to_string(required_n_max) + ")"),
        required_n_max_(required_n_max) {}
  int required_n_max() const noexcept { return required_n_max_; }

 private:
  int required_n_max_;
};

// Two independent computational routes disagree beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Singular values fall inside the forbidden gap (1e-7, 1e-3).
class IndeterminateRank : public Error {
 public:
  using Error::Error;
};

// Index changed when the window was enlarged.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

// A Fock-space operator was applied to a state touching the boundary mode.
class MarginExhausted : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace carlab
