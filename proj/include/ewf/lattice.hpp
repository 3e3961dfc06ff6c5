// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <optional>
#include <vector>

#include "ewf/rational.hpp"
#include "ewf/system.hpp"

namespace ewf {

/// Relative tolerance of the floating-point test b_n * alpha in Z.
inline constexpr double kIntegralityTol = 1e-9;

/// One point alpha of Lambda = U_n b_n^{-1} Z together with the bands n
/// for which b_n alpha is an integer.
struct AlphaElement {
  double value = 0.0;
  std::optional<Rational> exact;
  std::vector<int> members;
};

/// Lambda intersected with [-halfWidth, halfWidth], sorted by value.
///
/// When every active band carries an exact fractional shift step the
/// elements and memberships are computed in exact arithmetic.
struct AlphaLattice {
  double halfWidth = 0.0;
  bool exact = false;
  std::vector<AlphaElement> elements;

  /// The element equal to alpha (exactly or within the integrality
  /// tolerance), or nullptr.
  const AlphaElement* find(double alpha) const;
};

AlphaLattice buildAlphaLattice(const EmpiricalWaveletSystem& system, double halfWidth);

/// N_alpha = { n : b_n alpha in Z } over the system's active bands.
std::vector<int> latticeMembers(const EmpiricalWaveletSystem& system, double alpha);

}  // namespace ewf
