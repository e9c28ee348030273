// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_ERRORS_HPP
#define ZETASUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetasum {

/// Argument outside the domain where an evaluator is defined or validated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a pole (k = 1 for zeta, non-positive integer for gamma).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The power-sum formulas exclude the harmonic exponent k = -1.
class SingularParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Request exceeds a fixed design limit (Bernoulli table size).
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integrand produced a non-finite value; carries the offending abscissa.
class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace zetasum

#endif  // ZETASUM_ERRORS_HPP
