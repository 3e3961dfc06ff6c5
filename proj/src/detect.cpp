// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ewf/error.hpp"
#include "ewf/partition.hpp"

namespace ewf {

namespace {

// Lowest bin in (from, to], ties toward the lower frequency.
std::size_t argminBetween(const std::vector<double>& m, std::size_t from, std::size_t to) {
  std::size_t best = from + 1;
  for (std::size_t i = from + 1; i <= to; ++i) {
    if (m[i] < m[best]) best = i;
  }
  return best;
}

}  // namespace

BoundarySet detectBoundaries(const MagnitudeSpectrum& spectrum, int bandCount) {
  const auto& f = spectrum.frequency;
  const auto& m = spectrum.magnitude;
  if (bandCount < 1) throw Error(ErrorCode::InvalidArgument, "bandCount must be positive");
  if (f.size() != m.size()) {
    throw Error(ErrorCode::InvalidArgument, "frequency and magnitude columns differ in length");
  }
  if (m.size() < 2 * static_cast<std::size_t>(bandCount) + 1) {
    throw Error(ErrorCode::InvalidArgument,
                "spectrum needs at least 2*bandCount+1 samples, got " + std::to_string(m.size()));
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(m[i] >= 0.0) || !std::isfinite(m[i])) {
      throw Error(ErrorCode::InvalidArgument, "magnitudes must be finite and nonnegative");
    }
    if (i > 0 && !(f[i] > f[i - 1])) {
      throw Error(ErrorCode::NonMonotoneBoundaries, "frequency column must be strictly increasing");
    }
  }
  if (f.front() < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "spectrum must cover nonnegative frequencies only");
  }

  // Interior local maxima; a plateau counts once, at its left end.
  std::vector<std::size_t> maxima;
  for (std::size_t i = 1; i + 1 < m.size(); ++i) {
    if (m[i] > m[i - 1] && m[i] >= m[i + 1] && m[i] > 0.0) maxima.push_back(i);
  }
  if (maxima.size() < static_cast<std::size_t>(bandCount)) {
    throw Error(ErrorCode::NotEnoughExtrema, "found " + std::to_string(maxima.size()) +
                                                 " local maxima, need " +
                                                 std::to_string(bandCount));
  }
  std::stable_sort(maxima.begin(), maxima.end(),
                   [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });
  maxima.resize(static_cast<std::size_t>(bandCount));
  std::sort(maxima.begin(), maxima.end());

  std::vector<double> positive;
  for (std::size_t j = 0; j + 1 < maxima.size(); ++j) {
    positive.push_back(f[argminBetween(m, maxima[j], maxima[j + 1] - 1)]);
  }
  positive.push_back(f[argminBetween(m, maxima.back(), m.size() - 1)]);

  BoundarySet out;
  out.variant = BoundaryVariant::Standard;
  out.leftInfinite = true;
  out.rightInfinite = true;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.points.push_back(-*it);
  out.points.push_back(0.0);
  out.points.insert(out.points.end(), positive.begin(), positive.end());
  return out;
}

}  // namespace ewf
