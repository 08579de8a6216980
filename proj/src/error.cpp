#include "plenoptic/error.hpp"

namespace plenoptic {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::FocusNotBeyondFocal: return "FocusNotBeyondFocal";
    case ErrorCode::BothOrNeitherFocusGiven: return "BothOrNeitherFocusGiven";
    case ErrorCode::VirtualObject: return "VirtualObject";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ParallelRays: return "ParallelRays";
    case ErrorCode::MixedSides: return "MixedSides";
    case ErrorCode::VirtualRefocusPlane: return "VirtualRefocusPlane";
    case ErrorCode::DegenerateDOF: return "DegenerateDOF";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::InvalidGap: return "InvalidGap";
    case ErrorCode::VirtualPlane: return "VirtualPlane";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::InvalidScene: return "InvalidScene";
    case ErrorCode::InvalidJson: return "InvalidJson";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace plenoptic
