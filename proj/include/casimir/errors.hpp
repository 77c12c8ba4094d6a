#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Malformed or out-of-contract input (arity mismatch, bad tuple text, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Polynomial has no power-sum representation modulo p1.
struct NotSymmetric : std::domain_error {
  using std::domain_error::domain_error;
};

/// Samples do not fit a polynomial in n of the requested degree.
struct InterpolationInconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Jet with a non-invertible constant term.
struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace casimir
