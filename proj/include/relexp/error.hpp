#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relexp {

enum class ErrorKind {
  Pole,                  // single Γ evaluated at a non-positive integer
  NonIntegerShift,       // Γ(a)/Γ(b) requested with non-integer a − b
  UncancelledPole,       // exactly one side of a Γ ratio is a pole
  DenominatorPole,       // a bottom Pochhammer vanishes before termination
  NonTerminating,        // hypergeometric / Racah sum has no terminating parameter
  PhaseAmbiguity,        // continued value does not collapse to a real number
  Divergent,             // regularised value has a net pole
  InvalidOrbital,
  ConvergenceViolation,
  UnsupportedPower,
  PoleInClosedForm,
  NotApplicable,
  DomainError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace relexp
