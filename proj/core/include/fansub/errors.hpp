#pragma once

#include <stdexcept>
#include <string>

namespace fansub {

/// Invalid physical input: non-positive density, gamma < 1, bad ordering of
/// wave-curve arguments, non-finite data.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The nu-elimination of the reduced system is singular because rho1
/// coincides with an outer density.
class SingularEliminationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative solver failed to converge. Carries the last residual and,
/// for bracketed methods, the bracket at failure.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual_,
               double bracket_lo_ = 0.0, double bracket_hi_ = 0.0)
      : std::runtime_error(what),
        residual(residual_),
        bracket_lo(bracket_lo_),
        bracket_hi(bracket_hi_) {}

  double residual;
  double bracket_lo;
  double bracket_hi;
};

/// Candidate violates the fan ordering nu_minus < nu_1 < nu_plus.
class OrderingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fansub
