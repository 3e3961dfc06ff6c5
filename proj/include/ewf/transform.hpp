// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "ewf/signal.hpp"
#include "ewf/system.hpp"

namespace ewf {

enum class CoefficientMode { ContinuousGrid, Discrete };

const char* to_string(CoefficientMode mode);

/// Coefficients of one band; values[k] belongs to the translate b = k * shiftStep.
struct BandCoefficients {
  int index = 0;
  double shiftStep = 0.0;
  Eigen::Index stride = 1;  ///< shiftStep in samples
  Eigen::VectorXcd values;
};

struct CoefficientSet {
  CoefficientMode mode = CoefficientMode::Discrete;
  double sampleInterval = 1.0;
  Eigen::Index signalLength = 0;
  std::vector<BandCoefficients> bands;

  /// sum_n sum_k |c_{n,k}|^2.
  double energy() const;
  const BandCoefficients& band(int index) const;
};

/// Continuous empirical wavelet transform with b on the signal grid.
/// Excluded bands produce no entry.
CoefficientSet cewtForward(const SampledSignal& f, const EmpiricalWaveletSystem& system);

/// Discrete transform: the continuous one subsampled at b = k b_n. Each b_n
/// must be a whole number of samples that divides the signal length.
CoefficientSet dewtForward(const SampledSignal& f, const EmpiricalWaveletSystem& system);

/// Adjoint of the analysis map: sum_n sum_k c_{n,k} psi_{n,k} on the grid.
/// Discrete coefficients use the plain inner product sum_k c conj(d);
/// continuous-grid ones use dt * sum_b c conj(d), the quadrature of db.
SampledSignal synthesize(const CoefficientSet& coeffs, const EmpiricalWaveletSystem& system);

/// S f = synthesize(dewtForward(f)).
SampledSignal frameOperatorApply(const SampledSignal& f, const EmpiricalWaveletSystem& system);

struct ReconstructOptions {
  /// Iteration cap; 0 means 10 * signal length.
  int maxIterations = 0;
  double tolerance = 1e-12;
  /// Lower frame bound reported by frame analysis, when known.
  std::optional<double> lowerBound;
  /// Solve within signals whose spectrum lies in the system's gamma region
  /// (P S P g = P synthesize(coeffs)), the space the frame checks certify.
  /// No effect when gamma is the full line.
  bool restrictToGamma = true;
};

struct ReconstructResult {
  SampledSignal signal;
  int iterations = 0;
  double relativeResidual = 0.0;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Solves S g = synthesize(coeffs) by conjugate gradients. On a Parseval
/// system this is one iteration. When the cap is hit the best iterate is
/// returned with converged = false.
ReconstructResult reconstruct(const CoefficientSet& coeffs, const EmpiricalWaveletSystem& system,
                              const ReconstructOptions& options = {});

/// Samples per shift step for a given grid; throws IncommensurateShiftStep.
Eigen::Index shiftStride(double shiftStep, double sampleInterval, Eigen::Index signalLength);

}  // namespace ewf
