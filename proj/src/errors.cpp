#include "boxspace/errors.hpp"

namespace boxspace {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::NotCayley: return "NotCayley";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotHomomorphic: return "NotHomomorphic";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotDividing: return "NotDividing";
    case ErrorCode::DiametersNotIncreasing: return "DiametersNotIncreasing";
    case ErrorCode::GapTooSmall: return "GapTooSmall";
    case ErrorCode::MismatchedPointSets: return "MismatchedPointSets";
    case ErrorCode::MissingWallData: return "MissingWallData";
    case ErrorCode::KernelNotPSD: return "KernelNotPSD";
    case ErrorCode::NoValidS: return "NoValidS";
    case ErrorCode::EtaEscapesH: return "EtaEscapesH";
    case ErrorCode::InequalityViolated: return "InequalityViolated";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

bool is_validation(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph:
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::NotRegular:
    case ErrorCode::BadGenerator:
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::NotDividing:
    case ErrorCode::GapTooSmall:
    case ErrorCode::MismatchedPointSets:
    case ErrorCode::MissingWallData:
    case ErrorCode::NotSymmetric:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace boxspace
