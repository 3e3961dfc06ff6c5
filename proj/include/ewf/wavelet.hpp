// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ewf/partition.hpp"

namespace ewf {

using Complex = std::complex<double>;

/// Spectral profile xi -> psi_hat(xi). Must be pure and reentrant.
using SpectralProfile = std::function<Complex(double)>;

enum class SupportShape { Compact, LeftRaySupport, RightRaySupport, FullLine };

const char* to_string(SupportShape shape);

/// Where the profile may be nonzero. Only the finite endpoints are meaningful:
/// `lower` for Compact and RightRaySupport, `upper` for Compact and LeftRaySupport.
struct SupportDescriptor {
  SupportShape shape = SupportShape::FullLine;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  static SupportDescriptor compact(double lower, double upper);
  static SupportDescriptor leftRay(double upper);
  static SupportDescriptor rightRay(double lower);
  static SupportDescriptor fullLine();

  bool isCompact() const { return shape == SupportShape::Compact; }
  double length() const {
    return isCompact() ? upper - lower : std::numeric_limits<double>::infinity();
  }
  bool contains(double xi) const { return xi >= lower && xi <= upper; }
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  double length() const { return upper - lower; }
  bool contains(double x) const { return x >= lower && x <= upper; }
};

/// Essential support E with the mass fraction delta it leaves outside.
struct EssentialSupport {
  Interval interval;
  double delta = 0.0;
  double length() const { return interval.length(); }
};

/// A mother wavelet given by its spectral profile.
///
/// Construction validates the support descriptor against the profile,
/// computes ||psi_hat||^2 by quadrature and, when a delta is supplied, the
/// essential support. Instances are immutable and cheap to copy.
class MotherWavelet {
public:
  MotherWavelet(std::string name, SpectralProfile profile, SupportDescriptor support,
                std::optional<double> delta = 0.01);

  Complex operator()(double xi) const { return amplitude_ * (*profile_)(xi); }
  double magnitudeSq(double xi) const { return std::norm((*this)(xi)); }

  const std::string& name() const { return name_; }
  const SupportDescriptor& support() const { return support_; }
  double l2NormSq() const { return l2NormSq_; }
  const std::optional<EssentialSupport>& essential() const { return essential_; }
  Complex amplitude() const { return amplitude_; }

  /// Largest sampled |psi_hat|.
  double peak() const { return peak_; }

  /// Interval outside of which the profile carries less than `kTailMass` of
  /// its energy. Equal to the support itself for compact profiles.
  const Interval& reach() const { return reach_; }
  static constexpr double kTailMass = 1e-14;

  /// Same wavelet with psi_hat multiplied by c. Supports and essential
  /// supports are unchanged; norms scale by |c|^2.
  MotherWavelet scaled(Complex c) const;

  /// Same profile with the essential support recomputed for another delta.
  MotherWavelet withDelta(double delta) const;

private:
  MotherWavelet() = default;
  void initialise(std::optional<double> delta);

  std::string name_;
  std::shared_ptr<const SpectralProfile> profile_;
  SupportDescriptor support_;
  Complex amplitude_{1.0, 0.0};
  double l2NormSq_ = 0.0;
  double peak_ = 0.0;
  Interval reach_;
  std::optional<EssentialSupport> essential_;
};

/// Indicator of [-1/2, 1/2), half-open so that translates tile the line.
MotherWavelet shannonWavelet(std::optional<double> delta = 0.01);

/// Real, nonnegative bump equal to 1 on |xi| <= 1/2 - tau and rolling off
/// through cos(pi/2 * beta(x)) with beta(x) = x^4 (35 - 84x + 70x^2 - 20x^3)
/// over a transition of half-width tau around |xi| = 1/2. Translates by 1
/// satisfy sum |psi_hat|^2 = 1.
MotherWavelet meyerWavelet(double tau, std::optional<double> delta = 0.01);

/// psi_hat(xi) = exp(-pi xi^2), supported on the whole line.
MotherWavelet gaussianWavelet(std::optional<double> delta = 0.01);

/// Piecewise-linear interpolation of sampled (xi, Re, Im) triples, zero
/// outside the sampled range.
MotherWavelet sampledWavelet(std::vector<double> xi, std::vector<Complex> values,
                             std::optional<double> delta = 0.01);

/// Meyer transition polynomial, clamped to [0, 1] outside the unit interval.
double meyerTransition(double x);

/// Smallest symmetric [-e, e] holding at least (1 - delta) of ||psi_hat||^2,
/// found by bisection on e. For compact support and delta = 0 this is the
/// bounding interval of the support.
Interval essentialSupport(const MotherWavelet& wavelet, double delta);

/// a_n = gamma |Omega_n| / |S| for compact S (minimal cover when gamma = 1).
double scaleFactorCompact(const Support& band, const MotherWavelet& wavelet, double overlap = 1.0);

/// a_n = |Omega_n| / |E|.
double scaleFactorEssential(const Support& band, const MotherWavelet& wavelet);

/// Scale factor for a ray band; needs the band's (mirrored) centre.
double scaleFactorRay(const Support& ray, const MotherWavelet& wavelet);

}  // namespace ewf
