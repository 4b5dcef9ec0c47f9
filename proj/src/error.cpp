#include "tscalc/error.hpp"

namespace tscalc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::PointNotInScale: return "PointNotInScale";
    case Errc::MaximumPoint: return "MaximumPoint";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::ModeRequired: return "ModeRequired";
    case Errc::NotRegressive: return "NotRegressive";
    case Errc::InvalidScale: return "InvalidScale";
    case Errc::WrongScaleKind: return "WrongScaleKind";
    case Errc::NotDiscrete: return "NotDiscrete";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::KernelDomain: return "KernelDomain";
    case Errc::NonPositiveA: return "NonPositiveA";
    case Errc::InvalidExponents: return "InvalidExponents";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::InvalidProblem: return "InvalidProblem";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NegativeSqrt: return "NegativeSqrt";
    case Errc::DomainError: return "DomainError";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace tscalc
