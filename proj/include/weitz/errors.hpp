#pragma once

#include <stdexcept>
#include <string>

namespace weitz {

enum class ErrorKind {
  MixedParity,
  NotDominant,
  RankMismatch,
  InternalNonInteger,
  NotASummand,
  OddDimension,
  NotExceptional,
  RankDeficit,
  UnknownTarget,
  WeightMismatch,
  SymmetryViolation,
  BianchiViolation,
  IndexOutOfRange,
  WrongDimension,
  ReducibleRequest,
  BudgetExceeded,
  AmbientMissing,
  EigenvalueCollision,
  ParseError,
  IoError,
};

/// Library-wide exception carrying a machine-checkable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace weitz
