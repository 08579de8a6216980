#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plenoptic {

enum class ErrorCode {
  NonPositiveLength,
  NonFiniteValue,
  MTooSmall,
  FocusNotBeyondFocal,
  BothOrNeitherFocusGiven,
  VirtualObject,
  InvalidSystem,
  SingularSystem,
  ParallelRays,
  MixedSides,
  VirtualRefocusPlane,
  DegenerateDOF,
  EmptySeries,
  InvalidGap,
  VirtualPlane,
  UnsupportedKind,
  UnsupportedVersion,
  InvalidScene,
  InvalidJson,
  UnknownField,
  MissingField,
  InvalidArgument,
};

// Stable identifier used in CLI messages and JSON error objects.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

/// An error carried in-band by series computations instead of being thrown.
struct Failure {
  ErrorCode code;
  std::string message;

  static Failure from(const Error& e) { return {e.code(), e.what()}; }
  std::string_view name() const noexcept { return error_name(code); }
};

}  // namespace plenoptic
