// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <functional>

namespace ewf {

using RealFunction = std::function<double(double)>;

/// Adaptive 31-point Gauss-Kronrod quadrature on [a, b]. The nodes are
/// interior, so jumps exactly at a or b integrate to their one-sided limits.
/// Throws NonIntegrableProfile if the integrand produces non-finite values.
double integrate(const RealFunction& f, double a, double b, double relTol = 1e-10);

/// Integral over [0, inf) of an integrand that decays at infinity.
///
/// The radius doubles from `scale` until a new shell adds less than relTol of
/// the running total; throws NonIntegrableProfile if it never settles.
double integrateHalfLine(const RealFunction& f, double scale, double relTol = 1e-10);

}  // namespace ewf
