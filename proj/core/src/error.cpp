#include "unogrid/error.hpp"

namespace unogrid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPermutation: return "NonPermutation";
    case ErrorCode::MarkingCollision: return "MarkingCollision";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::InvalidSite: return "InvalidSite";
    case ErrorCode::BadPolicy: return "BadPolicy";
    case ErrorCode::NonHomogeneousEntry: return "NonHomogeneousEntry";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotChainMap: return "NotChainMap";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ChainMapViolation: return "ChainMapViolation";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::MoveSequenceInvalid: return "MoveSequenceInvalid";
    case ErrorCode::SitesNotDisjoint: return "SitesNotDisjoint";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

}  // namespace unogrid
