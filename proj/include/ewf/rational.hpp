// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ewf {

/// Exact p/q with q > 0 and gcd(p, q) = 1. Used for shift steps given as
/// fractions, where lattice membership must not depend on rounding.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t p, std::int64_t q = 1) : num(p), den(q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool isInteger() const { return den == 1; }
  Rational reciprocal() const { return {den, num}; }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    const auto g1 = std::gcd(a.num, b.den);
    const auto g2 = std::gcd(b.num, a.den);
    const auto n1 = g1 ? a.num / g1 : a.num;
    const auto d2 = g1 ? b.den / g1 : b.den;
    const auto n2 = g2 ? b.num / g2 : b.num;
    const auto d1 = g2 ? a.den / g2 : a.den;
    return {n1 * n2, d1 * d2};
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

}  // namespace ewf
