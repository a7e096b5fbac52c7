#include "relexp/error.hpp"

namespace relexp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Pole: return "Pole";
    case ErrorKind::NonIntegerShift: return "NonIntegerShift";
    case ErrorKind::UncancelledPole: return "UncancelledPole";
    case ErrorKind::DenominatorPole: return "DenominatorPole";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::PhaseAmbiguity: return "PhaseAmbiguity";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::InvalidOrbital: return "InvalidOrbital";
    case ErrorKind::ConvergenceViolation: return "ConvergenceViolation";
    case ErrorKind::UnsupportedPower: return "UnsupportedPower";
    case ErrorKind::PoleInClosedForm: return "PoleInClosedForm";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

}  // namespace relexp
