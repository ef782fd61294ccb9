#ifndef THETA_ERROR_HPP
#define THETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace theta {

// Base class of every error thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument violates an operation's precondition.
struct precondition_error : error {
  using error::error;
};

// An exhaustive enumeration was asked to run past its configured cap.
struct enumeration_limit_error : precondition_error {
  using precondition_error::precondition_error;
};

// A height function gives two vertices the same value.
struct degenerate_height_error : precondition_error {
  using precondition_error::precondition_error;
};

// Polynomial or series division left a nonzero remainder. The message
// carries the remainder as a witness.
struct inexact_division_error : error {
  inexact_division_error(const std::string& msg, std::string remainder_witness)
      : error(msg + " [remainder: " + remainder_witness + "]"),
        remainder(std::move(remainder_witness)) {}
  std::string remainder;
};

// A Laurent window cannot represent a required exponent.
struct truncation_error : error {
  using error::error;
};

// A quantity that must be an integer came out with a nontrivial denominator.
struct integrality_error : error {
  using error::error;
};

// An identity the computation relies on failed to hold at runtime.
struct formula_violation_error : error {
  using error::error;
};

}  // namespace theta

#endif
