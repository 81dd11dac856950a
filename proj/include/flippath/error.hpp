#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flippath {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  CoordinateOutOfRange,
  DuplicatePoint,
  DegenerateInput,
  NotGeneralPosition,
  PointOnObstacle,
  OverlappingObstacles,
  NotPermutation,
  NotPlane,
  RemovedNotPresent,
  AddedAlreadyPresent,
  ResultNotPath,
  ResultNotPlane,
  CapExceeded,
  DisconnectedGraph,
  VertexNotFound,
  Unreachable,
  NotConvexPosition,
  NotOneOutside,
  InstanceMismatch,
  NotCanonical,
  NotStronglyCanonical,
  DegreeMismatch,
  ProofDeviation,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flippath
