// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ewf/lattice.hpp"
#include "ewf/signal.hpp"
#include "ewf/system.hpp"

namespace ewf {

/// Uniform half-open grid xi_j = lower + j (upper - lower) / points.
struct FrequencyGrid {
  double lower = 0.0;
  double upper = 0.0;
  Eigen::Index points = 0;

  double step() const { return (upper - lower) / static_cast<double>(points); }
  double at(Eigen::Index j) const {
    return lower + (upper - lower) * static_cast<double>(j) / static_cast<double>(points);
  }
  Eigen::VectorXd values() const;
  FrequencyGrid refined() const { return {lower, upper, 2 * points}; }
  /// Index range [first, last) of grid points inside the closed interval.
  std::pair<Eigen::Index, Eigen::Index> indexRange(const Interval& interval) const;
};

inline constexpr Eigen::Index kDefaultGridPoints = Eigen::Index{1} << 16;

/// The region where frame conditions are evaluated: the system's gamma
/// region intersected with an optional window. Unbounded gamma sides need
/// the window; without one, the compact extent of the partition is used.
Interval evaluationDomain(const EmpiricalWaveletSystem& system, std::optional<Interval> window = std::nullopt);

struct ParsevalSum {
  /// s(xi) = sum_n (1/a_n) |psi_hat((xi - omega_n)/a_n)|^2 as written.
  Eigen::VectorXd signedSum;
  /// The same sum with 1/|a_n|.
  Eigen::VectorXd absoluteSum;
  double deviation = 0.0;          ///< sup |signedSum - 1|
  double absoluteDeviation = 0.0;  ///< sup |absoluteSum - 1|
  bool negativeRayScale = false;   ///< some ray band in the window has a_n < 0
  std::vector<int> bands;          ///< bands that met the grid
};

/// Continuous Parseval sum. Throws NegativeScaleOnCompact when a compact
/// band carries a_n < 0.
ParsevalSum parsevalSum(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid);

/// G_alpha(xi) = sum_{n in N_alpha} 1/(|b_n||a_n|) psi_hat((xi-omega_n)/a_n)
///               conj(psi_hat((xi+alpha-omega_n)/a_n)).
/// Throws AlphaNotInLattice when N_alpha is empty.
Eigen::VectorXcd crossTermG(const EmpiricalWaveletSystem& system, double alpha, const FrequencyGrid& grid);

/// Grid sup/inf of the bound integrands, truncated to |k| <= kRange.
struct BoundEvaluation {
  double value = 0.0;
  /// Largest contribution of the next kRange shells (kRange < |k| <= 2 kRange).
  double tailEstimate = 0.0;
  /// |value(2x grid) - value(grid)|.
  double refinementDelta = 0.0;
  int kRange = 0;
};

inline constexpr double kBoundTailTol = 1e-12;

/// B = sup_xi sum_n sum_k 1/(|b_n||a_n|) |psi_hat(.)psi_hat(. - k/b_n)|.
/// Evaluated on the grid and its 2x refinement; throws TruncationInsufficient
/// when the tail estimate exceeds kBoundTailTol * B.
BoundEvaluation besselBoundB(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid, int kRange);

/// A = inf_xi (diagonal - sum_{k != 0} |cross terms|), same truncation rules.
BoundEvaluation lowerBoundA(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid, int kRange);

struct LicEvaluation {
  double value = 0.0;
  int kRange = 0;
  double tailEstimate = 0.0;
};

/// Truncated local integrability sum
///   L(f) = sum_n sum_{|m|<=K} int_{supp f_hat} |f_hat(xi + m/b_n)|^2
///          1/(|b_n||a_n|) |psi_hat((xi - omega_n)/a_n)|^2 dxi
/// on the probe's DFT grid. kRange = 0 picks the smallest K that reaches
/// across the probe's spectral support.
LicEvaluation licDiagnostic(const EmpiricalWaveletSystem& system, const SampledSignal& probe, int kRange = 0);

enum class Verdict { ParsevalCertified, FrameCertified, BesselOnly, Indeterminate };

const char* to_string(Verdict verdict);

struct CertifyOptions {
  std::optional<Interval> window;
  /// Half-width of the alpha window; 0 means the domain length.
  double alphaHalfWidth = 0.0;
  Eigen::Index gridPoints = kDefaultGridPoints;
  int kRange = 8;
};

inline constexpr double kKroneckerTol = 1e-8;
inline constexpr double kEnergyRatioTol = 1e-6;

struct FrameReport {
  Interval domain;
  Eigen::Index gridPoints = 0;  ///< coarse grid; the refined one has twice as many
  std::vector<int> bands;
  int kRange = 0;
  double alphaHalfWidth = 0.0;
  bool exactLattice = false;

  double parsevalSumDeviation = 0.0;
  double parsevalSumAbsoluteDeviation = 0.0;
  std::vector<std::pair<double, double>> crossTermResiduals;  ///< (alpha, max |G_alpha - delta|)
  double maxCrossTermResidual = 0.0;

  std::optional<double> besselB;  ///< empty when truncation was insufficient
  double lowerA = 0.0;
  double besselTail = 0.0;
  double lowerTail = 0.0;
  double besselRefinementDelta = 0.0;
  double lowerRefinementDelta = 0.0;

  std::vector<double> licValues;
  std::vector<double> energyRatios;
  Verdict verdict = Verdict::Indeterminate;
  std::vector<std::string> warnings;
};

/// Runs every check and cross-validates with the probes' empirical energy
/// ratios. Probes must be spectrally inside the evaluation domain and share
/// a grid on which every b_n is a whole number of samples. Throws
/// InconsistentCertificate when a ratio falls outside [A, B].
FrameReport certify(const EmpiricalWaveletSystem& system, const std::vector<SampledSignal>& probes,
                    const CertifyOptions& options = {});

/// Sampling (dt, N) whose Nyquist band covers the window and on which every
/// active shift step is a whole number of samples dividing N >= minLength.
struct ProbeGrid {
  double sampleInterval = 1.0;
  Eigen::Index length = 0;
};
ProbeGrid chooseProbeGrid(const EmpiricalWaveletSystem& system, const Interval& window, Eigen::Index minLength = 4096);

/// Random signal whose DFT is complex Gaussian on the bins in [domain.lower,
/// domain.upper) and zero elsewhere.
SampledSignal randomBandlimitedSignal(std::mt19937_64& rng, const ProbeGrid& grid, const Interval& domain);

}  // namespace ewf
