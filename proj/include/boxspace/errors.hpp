#pragma once

#include <stdexcept>
#include <string>

namespace boxspace {

enum class ErrorCode {
  DisconnectedGraph,
  SizeCapExceeded,
  NotRegular,
  BadGenerator,
  NotCayley,
  NotBijective,
  NotHomomorphic,
  OrderCapExceeded,
  NotDividing,
  DiametersNotIncreasing,
  GapTooSmall,
  MismatchedPointSets,
  MissingWallData,
  KernelNotPSD,
  NoValidS,
  EtaEscapesH,
  InequalityViolated,
  ConditionViolated,
  NotSymmetric,
  NoConvergence,
  InvalidArgument,
  IoError,
};

const char* to_string(ErrorCode code);

// Input-shape problems, as opposed to failed runtime certificates.
bool is_validation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace boxspace
