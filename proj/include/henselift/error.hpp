#pragma once

#include <stdexcept>
#include <string>

namespace henselift {

enum class Errc {
  InvalidArgument,
  NotPrime,
  NotAUnit,
  IndexOutOfRange,
  DegreeZero,
  EmptyFactorList,
  DegreeZeroFactor,
  ZeroResultant,
  NotSpecialForm,
  SingularMatrix,
  PrecisionTooLow,
  InsufficientValuation,
  DegreeMismatch,
  NotCongruent,
  PrecisionBoundViolated,
  MaxStepsExceeded,
  HypothesisViolated,
  InvariantViolation,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  // Broken internal invariant, as opposed to bad input.
  bool is_internal() const noexcept { return code_ == Errc::InvariantViolation; }

 private:
  Errc code_;
};

}  // namespace henselift
