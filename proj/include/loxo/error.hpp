#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loxo {

enum class ErrorCode {
  // numerics
  NonFiniteIntegrand,
  ToleranceNotMet,
  StiffOrSingular,
  DomainExit,
  NonFiniteSample,
  // surface models
  InvalidParams,
  EmptyDomain,
  OutOfDomain,
  UmbilicPoleSingularity,
  // loxodromes
  EmptyTDomain,
  ClosedFormCaseGap,
  LogSingularity,
  PoleSingularity,
  KindMismatch,
  // oracle / characterizations
  DegenerateVelocity,
  NotApplicable,
  UndefinedTorsion,
  // front end
  IoError,
  UnknownFigure,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` drives CLI exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<double> location = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        location_(location) {}

  ErrorCode code() const noexcept { return code_; }

  /// Parameter value associated with the failure, e.g. the last valid s of a
  /// DomainExit or the offending abscissa of a NonFiniteIntegrand.
  std::optional<double> location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::optional<double> location_;
};

}  // namespace loxo
