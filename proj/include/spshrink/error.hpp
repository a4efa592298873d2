#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spshrink {

enum class ErrorCode {
  InvalidArgument,
  NumericalFailure,
  EmptySpectrum,
  SizeMismatch,
  DimensionMismatch,
  Singular,
  UnsupportedDimension,
  SingularConjugator,
  OracleFailure,
  DivisibilityViolation,
  NotHermitian,
  NotSpecialUnitary,
  RepresentativeNotFound,
  LambdaInSpectrum,
  NoSimpleEigenvalue,
  AmbiguousSelection,
  AmbiguousContinuation,
  BadStart,
  DegeneratePoints,
  NotSemisimple,
  AmbiguousClustering,
  EqualEigenvalues,
  PreconditionViolated,
  WellDefinednessDegraded,
  DimensionDrift,
  BranchAmbiguous,
  ResidualTooLarge,
  EigenvalueCollision,
  SpectrumViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `value()` carries the measured
/// quantity (residual, gap, defect) when the failure is quantitative.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<double> value = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        value_(value) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<double> value_;
};

}  // namespace spshrink
