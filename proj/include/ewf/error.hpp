// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ewf {

/// Coarse error classes. The CLI maps each to a stable exit code.
enum class ErrorKind { Validation, Numerical, IO };

/// Every named failure the library can raise.
enum class ErrorCode {
  // partitions
  NonMonotoneBoundaries,
  MissingZero,
  TooFewBoundaries,
  RayWithoutNeighbor,
  NotEnoughExtrema,
  // mother wavelet
  NonIntegrableProfile,
  ZeroLengthSupport,
  EmptyEssentialSupport,
  CompactSupportRayUnsupported,
  InvalidWavelet,
  // system and transforms
  EmptySystem,
  ExcludedBand,
  IncommensurateShiftStep,
  SystemMismatch,
  InvalidSignal,
  NotConverged,
  // frame analysis
  NegativeScaleOnCompact,
  AlphaNotInLattice,
  TruncationInsufficient,
  InconsistentCertificate,
  InvalidArgument,
  // io
  ParseError,
  FileError,
};

std::string_view to_string(ErrorCode code);
ErrorKind kind_of(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

private:
  ErrorCode code_;
};

}  // namespace ewf
