// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <random>
#include <vector>

#include "ewf/frame.hpp"
#include "ewf/partition.hpp"
#include "ewf/system.hpp"
#include "ewf/wavelet.hpp"

namespace ewf::testing {

/// Unit partition with boundaries -8, -7, ..., 8 and no rays.
inline BoundarySet unitBoundaries(int half = 8) {
  BoundarySet b;
  for (int p = -half; p <= half; ++p) b.points.push_back(p);
  return b;
}

inline EmpiricalWaveletSystem shannonUnitSystem(int half = 8) {
  return buildSystem(buildPartition(unitBoundaries(half)), shannonWavelet());
}

/// {-inf, -2, 0, 2, +inf} with the Gaussian profile, delta = 0.01.
inline EmpiricalWaveletSystem gaussianRaySystem() {
  BoundarySet b{{-2.0, 0.0, 2.0}, BoundaryVariant::Standard, true, true};
  return buildSystem(buildPartition(b), gaussianWavelet(0.01));
}

/// {-inf, -2, 0, 3, +inf} with the Shannon profile; both rays are excluded.
inline EmpiricalWaveletSystem shannonRaySystem() {
  BoundarySet b{{-2.0, 0.0, 3.0}, BoundaryVariant::Standard, true, true};
  return buildSystem(buildPartition(b), shannonWavelet());
}

inline std::vector<SampledSignal> probes(const EmpiricalWaveletSystem& system, const Interval& window, int count,
                                         std::uint64_t seed, Eigen::Index minLength = 4096) {
  const auto grid = chooseProbeGrid(system, window, minLength);
  const auto domain = evaluationDomain(system, window);
  std::mt19937_64 rng(seed);
  std::vector<SampledSignal> out;
  for (int i = 0; i < count; ++i) out.push_back(randomBandlimitedSignal(rng, grid, domain));
  return out;
}

inline double relativeError(const SampledSignal& g, const SampledSignal& f) {
  return (g.samples - f.samples).norm() / f.samples.norm();
}

}  // namespace ewf::testing
