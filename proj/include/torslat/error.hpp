#pragma once

#include <stdexcept>
#include <string>

namespace torslat {

enum class ErrorCode {
  InvalidArgument,
  InvalidRank,
  RankMismatch,
  RankTooLarge,
  OutOfSupport,
  OverlappingSupports,
  CycleDetected,
  NotALattice,
  NonHasseEdge,
  MissingCJR,
  SameArc,
  NotOverlapping,
  NotInImage,
  BudgetExceeded,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace torslat
