// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ewf/error.hpp"

namespace ewf {

namespace {

constexpr unsigned kMaxDepth = 20;
constexpr int kMaxShells = 60;

double checked(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonIntegrableProfile, "integrand is not finite");
  return v;
}

}  // namespace

double integrate(const RealFunction& f, double a, double b, double relTol) {
  if (!(b > a)) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate([&](double x) { return checked(f(x)); }, a, b, kMaxDepth, relTol);
}

double integrateHalfLine(const RealFunction& f, double scale, double relTol) {
  double lo = 0.0;
  double hi = scale;
  double total = integrate(f, lo, hi, relTol);
  for (int shell = 0; shell < kMaxShells; ++shell) {
    lo = hi;
    hi *= 2.0;
    const double part = integrate(f, lo, hi, relTol);
    total += part;
    if (std::abs(part) <= relTol * std::abs(total) * 1e-2) return total;
  }
  throw Error(ErrorCode::NonIntegrableProfile, "tail integral does not converge");
}

}  // namespace ewf
