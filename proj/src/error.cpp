#include "loxo/error.hpp"

namespace loxo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFiniteIntegrand: return "NonFiniteIntegrand";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::StiffOrSingular: return "StiffOrSingular";
    case ErrorCode::DomainExit: return "DomainExit";
    case ErrorCode::NonFiniteSample: return "NonFiniteSample";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::UmbilicPoleSingularity: return "UmbilicPoleSingularity";
    case ErrorCode::EmptyTDomain: return "EmptyTDomain";
    case ErrorCode::ClosedFormCaseGap: return "ClosedFormCaseGap";
    case ErrorCode::LogSingularity: return "LogSingularity";
    case ErrorCode::PoleSingularity: return "PoleSingularity";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DegenerateVelocity: return "DegenerateVelocity";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::UndefinedTorsion: return "UndefinedTorsion";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
  }
  return "Unknown";
}

}  // namespace loxo
