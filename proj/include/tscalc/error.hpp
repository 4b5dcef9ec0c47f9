#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tscalc {

enum class Errc {
  PointNotInScale,
  MaximumPoint,
  ModeMismatch,
  ModeRequired,
  NotRegressive,
  InvalidScale,
  WrongScaleKind,
  NotDiscrete,
  GridMismatch,
  KernelDomain,
  NonPositiveA,
  InvalidExponents,
  HypothesisViolated,
  InvalidProblem,
  NegativeRadicand,
  SyntaxError,
  UnknownVariable,
  DivisionByZero,
  NegativeSqrt,
  DomainError,
  ConfigError,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failure carrying the zero-based character offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tscalc
