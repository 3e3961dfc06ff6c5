// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/error.hpp"

namespace ewf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonotoneBoundaries: return "NonMonotoneBoundaries";
    case ErrorCode::MissingZero: return "MissingZero";
    case ErrorCode::TooFewBoundaries: return "TooFewBoundaries";
    case ErrorCode::RayWithoutNeighbor: return "RayWithoutNeighbor";
    case ErrorCode::NotEnoughExtrema: return "NotEnoughExtrema";
    case ErrorCode::NonIntegrableProfile: return "NonIntegrableProfile";
    case ErrorCode::ZeroLengthSupport: return "ZeroLengthSupport";
    case ErrorCode::EmptyEssentialSupport: return "EmptyEssentialSupport";
    case ErrorCode::CompactSupportRayUnsupported: return "CompactSupportRayUnsupported";
    case ErrorCode::InvalidWavelet: return "InvalidWavelet";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::ExcludedBand: return "ExcludedBand";
    case ErrorCode::IncommensurateShiftStep: return "IncommensurateShiftStep";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::InvalidSignal: return "InvalidSignal";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::NegativeScaleOnCompact: return "NegativeScaleOnCompact";
    case ErrorCode::AlphaNotInLattice: return "AlphaNotInLattice";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::InconsistentCertificate: return "InconsistentCertificate";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FileError: return "FileError";
  }
  return "Unknown";
}

ErrorKind kind_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonIntegrableProfile:
    case ErrorCode::NotConverged:
    case ErrorCode::TruncationInsufficient:
    case ErrorCode::InconsistentCertificate:
      return ErrorKind::Numerical;
    case ErrorCode::ParseError:
    case ErrorCode::FileError:
      return ErrorKind::IO;
    default:
      return ErrorKind::Validation;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ewf
