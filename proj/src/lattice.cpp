// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ewf/error.hpp"

namespace ewf {

namespace {

constexpr std::size_t kMaxElements = 200000;

bool nearlyInteger(double x) {
  return std::abs(x - std::round(x)) <= kIntegralityTol * std::max(1.0, std::abs(x));
}

bool sameAlpha(double a, double b) {
  return std::abs(a - b) <= kIntegralityTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

const AlphaElement* AlphaLattice::find(double alpha) const {
  for (const auto& e : elements) {
    if (sameAlpha(e.value, alpha)) return &e;
  }
  return nullptr;
}

std::vector<int> latticeMembers(const EmpiricalWaveletSystem& system, double alpha) {
  std::vector<int> out;
  for (const auto& atom : system.atoms()) {
    if (!atom.excluded && nearlyInteger(atom.shiftStep() * alpha)) out.push_back(atom.index);
  }
  return out;
}

AlphaLattice buildAlphaLattice(const EmpiricalWaveletSystem& system, double halfWidth) {
  if (!(halfWidth >= 0.0) || !std::isfinite(halfWidth)) {
    throw Error(ErrorCode::InvalidArgument, "alpha window half-width must be finite and nonnegative");
  }
  const auto atoms = system.activeAtoms();
  AlphaLattice lattice;
  lattice.halfWidth = halfWidth;
  lattice.exact = std::all_of(atoms.begin(), atoms.end(), [](const BandAtom& a) { return a.shift.exact.has_value(); });

  if (lattice.exact) {
    std::vector<Rational> values;
    for (const auto& a : atoms) {
      const Rational step = *a.shift.exact;
      const Rational inv = step.reciprocal();
      const auto mMax = static_cast<std::int64_t>(std::floor(halfWidth * std::abs(step.value()) + 1e-12));
      for (std::int64_t m = -mMax; m <= mMax; ++m) {
        const Rational alpha = Rational(m) * inv;
        if (std::abs(alpha.value()) <= halfWidth) values.push_back(alpha);
        if (values.size() > kMaxElements) throw Error(ErrorCode::InvalidArgument, "alpha window too large");
      }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (const auto& v : values) {
      AlphaElement e{v.value(), v, {}};
      for (const auto& a : atoms) {
        if ((*a.shift.exact * v).isInteger()) e.members.push_back(a.index);
      }
      lattice.elements.push_back(std::move(e));
    }
    return lattice;
  }

  std::vector<double> values;
  for (const auto& a : atoms) {
    const double step = std::abs(a.shiftStep());
    const auto mMax = static_cast<std::int64_t>(std::floor(halfWidth * step * (1.0 + kIntegralityTol)));
    for (std::int64_t m = -mMax; m <= mMax; ++m) {
      values.push_back(static_cast<double>(m) / step);
      if (values.size() > kMaxElements) throw Error(ErrorCode::InvalidArgument, "alpha window too large");
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<double> unique;
  for (double v : values) {
    if (unique.empty() || !sameAlpha(unique.back(), v)) unique.push_back(v);
  }
  for (double v : unique) {
    lattice.elements.push_back({v, std::nullopt, latticeMembers(system, v)});
  }
  return lattice;
}

}  // namespace ewf
