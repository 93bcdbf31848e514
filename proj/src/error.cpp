#include "torslat/error.hpp"

namespace torslat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::OutOfSupport: return "OutOfSupport";
    case ErrorCode::OverlappingSupports: return "OverlappingSupports";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NonHasseEdge: return "NonHasseEdge";
    case ErrorCode::MissingCJR: return "MissingCJR";
    case ErrorCode::SameArc: return "SameArc";
    case ErrorCode::NotOverlapping: return "NotOverlapping";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace torslat
