#include "cuspidal/error.hpp"

namespace cusp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::MultiplicityTooSmall: return "MultiplicityTooSmall";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::OddMilnor: return "OddMilnor";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SurgeryTooSmall: return "SurgeryTooSmall";
    case ErrorCode::SpinCOutOfRange: return "SpinCOutOfRange";
    case ErrorCode::MultipleCusps: return "MultipleCusps";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cusp
