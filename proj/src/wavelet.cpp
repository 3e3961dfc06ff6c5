// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ewf/error.hpp"
#include "ewf/quadrature.hpp"

namespace ewf {

namespace {

constexpr double kQuadTol = 1e-10;
constexpr double kProfileZero = 1e-14;
constexpr int kPeakSamples = 4096;
constexpr int kBisectionSteps = 200;

// |psi(x)|^2 + |psi(-x)|^2, the integrand for symmetric masses on [0, e].
double foldedSq(const MotherWavelet& w, double x) { return w.magnitudeSq(x) + w.magnitudeSq(-x); }

double symmetricMass(const MotherWavelet& w, double e) {
  return integrate([&](double x) { return foldedSq(w, x); }, 0.0, e, kQuadTol);
}

// Energy of the profile outside [-r, r].
double tailMass(const MotherWavelet& w, double r, double scale) {
  return integrateHalfLine([&](double x) { return foldedSq(w, r + x); }, scale, kQuadTol);
}

}  // namespace

const char* to_string(SupportShape shape) {
  switch (shape) {
    case SupportShape::Compact: return "compact";
    case SupportShape::LeftRaySupport: return "left-ray";
    case SupportShape::RightRaySupport: return "right-ray";
    case SupportShape::FullLine: return "full-line";
  }
  return "?";
}

SupportDescriptor SupportDescriptor::compact(double lower, double upper) {
  if (!(lower < upper) || !std::isfinite(lower) || !std::isfinite(upper)) {
    throw Error(ErrorCode::InvalidWavelet, "compact support needs finite lower < upper");
  }
  return {SupportShape::Compact, lower, upper};
}

SupportDescriptor SupportDescriptor::leftRay(double upper) {
  return {SupportShape::LeftRaySupport, -std::numeric_limits<double>::infinity(), upper};
}

SupportDescriptor SupportDescriptor::rightRay(double lower) {
  return {SupportShape::RightRaySupport, lower, std::numeric_limits<double>::infinity()};
}

SupportDescriptor SupportDescriptor::fullLine() { return {}; }

MotherWavelet::MotherWavelet(std::string name, SpectralProfile profile, SupportDescriptor support,
                             std::optional<double> delta)
    : name_(std::move(name)),
      profile_(std::make_shared<const SpectralProfile>(std::move(profile))),
      support_(support) {
  initialise(delta);
}

void MotherWavelet::initialise(std::optional<double> delta) {
  // Norm: integrate over the finite part of the support, extending to
  // infinity on the unbounded sides.
  const auto& s = support_;
  const auto sq = [this](double x) { return magnitudeSq(x); };
  double norm = 0.0;
  if (s.isCompact()) {
    norm = integrate(sq, s.lower, s.upper, kQuadTol);
  } else {
    const double mid = std::isfinite(s.lower) ? s.lower : (std::isfinite(s.upper) ? s.upper : 0.0);
    if (std::isfinite(s.lower) || s.shape == SupportShape::FullLine) {
      norm += integrateHalfLine([&](double x) { return sq(mid + x); }, 1.0, kQuadTol);
    }
    if (std::isfinite(s.upper) || s.shape == SupportShape::FullLine) {
      norm += integrateHalfLine([&](double x) { return sq(mid - x); }, 1.0, kQuadTol);
    }
  }
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::NonIntegrableProfile, name_ + ": ||psi_hat||^2 must be finite and positive");
  }
  l2NormSq_ = norm;

  // Reach: where the remaining tail mass falls below kTailMass.
  if (s.isCompact()) {
    reach_ = {s.lower, s.upper};
  } else {
    double r = 1.0;
    while (tailMass(*this, r, 1.0) > kTailMass * norm) {
      r *= 2.0;
      if (r > 1e8) throw Error(ErrorCode::NonIntegrableProfile, name_ + ": tails do not decay");
    }
    double lo = 0.0;
    double hi = r;
    for (int i = 0; i < 60; ++i) {
      const double m = 0.5 * (lo + hi);
      (tailMass(*this, m, 1.0) > kTailMass * norm ? lo : hi) = m;
    }
    reach_ = {std::isfinite(s.lower) ? std::max(s.lower, -hi) : -hi,
              std::isfinite(s.upper) ? std::min(s.upper, hi) : hi};
  }

  peak_ = 0.0;
  for (int i = 0; i <= kPeakSamples; ++i) {
    const double x = reach_.lower + reach_.length() * i / kPeakSamples;
    peak_ = std::max(peak_, std::abs((*this)(x)));
  }
  peak_ = std::max(peak_, std::abs((*this)(0.0)));

  // The descriptor must match where the profile is numerically nonzero.
  const double width = std::isfinite(reach_.length()) ? reach_.length() : 1.0;
  auto checkOutside = [&](double from, double dir) {
    for (int i = 1; i <= 512; ++i) {
      const double x = from + dir * width * i / 256.0;
      if (std::abs((*this)(x)) > kProfileZero * peak_) {
        throw Error(ErrorCode::InvalidWavelet,
                    name_ + ": profile is nonzero at xi = " + std::to_string(x) +
                        ", outside its declared support");
      }
    }
  };
  if (std::isfinite(s.lower)) checkOutside(std::nextafter(s.lower, -INFINITY), -1.0);
  if (std::isfinite(s.upper)) checkOutside(std::nextafter(s.upper, INFINITY), 1.0);

  if (delta) {
    const Interval e = essentialSupport(*this, *delta);
    essential_ = EssentialSupport{e, *delta};
    // Localised around zero frequency: the peak must be attained inside E.
    double inner = 0.0;
    for (int i = 0; i <= kPeakSamples; ++i) {
      const double x = e.lower + e.length() * i / kPeakSamples;
      inner = std::max(inner, std::abs((*this)(x)));
    }
    inner = std::max(inner, std::abs((*this)(0.0)));
    if (inner < peak_ * (1.0 - 1e-9)) {
      throw Error(ErrorCode::InvalidWavelet, name_ + ": profile is not localised around zero");
    }
  } else {
    essential_.reset();
  }
}

MotherWavelet MotherWavelet::scaled(Complex c) const {
  if (c == Complex(0.0, 0.0)) throw Error(ErrorCode::InvalidWavelet, "scaling by zero");
  MotherWavelet out = *this;
  out.amplitude_ = amplitude_ * c;
  out.l2NormSq_ = l2NormSq_ * std::norm(c);
  out.peak_ = peak_ * std::abs(c);
  return out;
}

MotherWavelet MotherWavelet::withDelta(double delta) const {
  MotherWavelet out = *this;
  out.essential_ = EssentialSupport{essentialSupport(*this, delta), delta};
  return out;
}

Interval essentialSupport(const MotherWavelet& w, double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "delta must lie in [0, 1)");
  }
  const auto& s = w.support();
  if (delta == 0.0) {
    if (!s.isCompact()) {
      throw Error(ErrorCode::EmptyEssentialSupport,
                  "delta = 0 needs a compactly supported profile");
    }
    return {s.lower, s.upper};
  }
  const double target = (1.0 - delta) * w.l2NormSq();
  double hi = s.isCompact() ? std::max(std::abs(s.lower), std::abs(s.upper))
                            : std::max(std::abs(w.reach().lower), std::abs(w.reach().upper));
  while (symmetricMass(w, hi) < target) {
    hi *= 2.0;
    if (hi > 1e12) throw Error(ErrorCode::NonIntegrableProfile, "essential support bisection diverged");
  }
  double lo = 0.0;
  for (int i = 0; i < kBisectionSteps && hi - lo > 1e-15 * hi; ++i) {
    const double m = 0.5 * (lo + hi);
    (symmetricMass(w, m) >= target ? hi : lo) = m;
  }
  if (!(hi > 0.0)) throw Error(ErrorCode::EmptyEssentialSupport, "essential support collapsed");
  return {-hi, hi};
}

double meyerTransition(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

MotherWavelet shannonWavelet(std::optional<double> delta) {
  return MotherWavelet(
      "shannon", [](double xi) { return Complex(xi >= -0.5 && xi < 0.5 ? 1.0 : 0.0, 0.0); },
      SupportDescriptor::compact(-0.5, 0.5), delta);
}

MotherWavelet meyerWavelet(double tau, std::optional<double> delta) {
  if (!(tau > 0.0 && tau <= 0.5)) {
    throw Error(ErrorCode::InvalidWavelet, "meyer transition half-width must lie in (0, 1/2]");
  }
  return MotherWavelet(
      "meyer",
      [tau](double xi) {
        const double x = std::abs(xi);
        if (x <= 0.5 - tau) return Complex(1.0, 0.0);
        if (x >= 0.5 + tau) return Complex(0.0, 0.0);
        const double t = (x - (0.5 - tau)) / (2.0 * tau);
        return Complex(std::cos(0.5 * std::numbers::pi * meyerTransition(t)), 0.0);
      },
      SupportDescriptor::compact(-0.5 - tau, 0.5 + tau), delta);
}

MotherWavelet gaussianWavelet(std::optional<double> delta) {
  return MotherWavelet(
      "gaussian", [](double xi) { return Complex(std::exp(-std::numbers::pi * xi * xi), 0.0); },
      SupportDescriptor::fullLine(), delta);
}

MotherWavelet sampledWavelet(std::vector<double> xi, std::vector<Complex> values,
                             std::optional<double> delta) {
  if (xi.size() != values.size() || xi.size() < 2) {
    throw Error(ErrorCode::InvalidWavelet, "sampled profile needs at least two (xi, value) pairs");
  }
  for (std::size_t i = 1; i < xi.size(); ++i) {
    if (!(xi[i] > xi[i - 1])) {
      throw Error(ErrorCode::InvalidWavelet, "sampled profile abscissae must be strictly increasing");
    }
  }
  const double lo = xi.front();
  const double hi = xi.back();
  auto table = std::make_shared<const std::pair<std::vector<double>, std::vector<Complex>>>(
      std::move(xi), std::move(values));
  return MotherWavelet(
      "custom",
      [table](double x) {
        const auto& [xs, vs] = *table;
        if (x < xs.front() || x > xs.back()) return Complex(0.0, 0.0);
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        if (it == xs.end()) return vs.back();
        const auto j = static_cast<std::size_t>(it - xs.begin());
        const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
        return vs[j - 1] + t * (vs[j] - vs[j - 1]);
      },
      SupportDescriptor::compact(lo, hi), delta);
}

double scaleFactorCompact(const Support& band, const MotherWavelet& w, double overlap) {
  if (!band.isCompact()) {
    throw Error(ErrorCode::InvalidArgument, "compact scale factor requested for a ray band");
  }
  if (!w.support().isCompact()) {
    throw Error(ErrorCode::InvalidArgument, "compact scale factor needs a compactly supported wavelet");
  }
  if (!(overlap >= 1.0)) throw Error(ErrorCode::InvalidArgument, "overlap multiplier must be >= 1");
  if (!(band.length() > 0.0)) {
    throw Error(ErrorCode::ZeroLengthSupport, "band " + std::to_string(band.index) + " has zero length");
  }
  return overlap * band.length() / w.support().length();
}

double scaleFactorEssential(const Support& band, const MotherWavelet& w) {
  if (!band.isCompact()) {
    throw Error(ErrorCode::InvalidArgument, "essential scale factor requested for a ray band");
  }
  if (!w.essential() || !(w.essential()->length() > 0.0)) {
    throw Error(ErrorCode::EmptyEssentialSupport, w.name() + " has no essential support");
  }
  if (!(band.length() > 0.0)) {
    throw Error(ErrorCode::ZeroLengthSupport, "band " + std::to_string(band.index) + " has zero length");
  }
  return band.length() / w.essential()->length();
}

double scaleFactorRay(const Support& ray, const MotherWavelet& w) {
  if (!ray.isRay()) throw Error(ErrorCode::InvalidArgument, "ray scale factor requested for a compact band");
  const auto shape = w.support().shape;
  if (shape == SupportShape::Compact) {
    throw Error(ErrorCode::CompactSupportRayUnsupported,
                "a compactly supported profile cannot cover ray band " + std::to_string(ray.index));
  }
  if (!w.essential() || !(w.essential()->length() > 0.0)) {
    throw Error(ErrorCode::EmptyEssentialSupport, w.name() + " has no essential support");
  }
  if (std::isnan(ray.center)) throw Error(ErrorCode::InvalidArgument, "ray centre not computed");
  const double e = w.essential()->length();
  if (ray.leftRay) {
    const double a = 2.0 * (ray.upper - ray.center) / e;
    return shape == SupportShape::RightRaySupport ? -a : a;
  }
  const double a = 2.0 * (ray.center - ray.lower) / e;
  return shape == SupportShape::LeftRaySupport ? -a : a;
}

}  // namespace ewf
