#include "spshrink/error.hpp"

namespace spshrink {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::EmptySpectrum: return "EmptySpectrum";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::SingularConjugator: return "SingularConjugator";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSpecialUnitary: return "NotSpecialUnitary";
    case ErrorCode::RepresentativeNotFound: return "RepresentativeNotFound";
    case ErrorCode::LambdaInSpectrum: return "LambdaInSpectrum";
    case ErrorCode::NoSimpleEigenvalue: return "NoSimpleEigenvalue";
    case ErrorCode::AmbiguousSelection: return "AmbiguousSelection";
    case ErrorCode::AmbiguousContinuation: return "AmbiguousContinuation";
    case ErrorCode::BadStart: return "BadStart";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::AmbiguousClustering: return "AmbiguousClustering";
    case ErrorCode::EqualEigenvalues: return "EqualEigenvalues";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WellDefinednessDegraded: return "WellDefinednessDegraded";
    case ErrorCode::DimensionDrift: return "DimensionDrift";
    case ErrorCode::BranchAmbiguous: return "BranchAmbiguous";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::EigenvalueCollision: return "EigenvalueCollision";
    case ErrorCode::SpectrumViolation: return "SpectrumViolation";
  }
  return "Unknown";
}

}  // namespace spshrink
