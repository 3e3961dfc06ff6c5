// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <limits>
#include <span>
#include <vector>

namespace ewf {

/// Standard boundary sets contain the point 0; starred ones exclude it and
/// merge the two supports around zero into one.
enum class BoundaryVariant { Standard, Starred };

/// Finite boundary points plus flags for the rays at either end.
///
/// Infinite endpoints are never stored as IEEE infinities. `leftInfinite`
/// means an implicit point at -inf precedes `points.front()`, and likewise
/// `rightInfinite` for +inf after `points.back()`.
struct BoundarySet {
  std::vector<double> points;
  BoundaryVariant variant = BoundaryVariant::Standard;
  bool leftInfinite = false;
  bool rightInfinite = false;

  bool operator==(const BoundarySet&) const = default;
};

/// Throws ewf::Error when the boundary set is not admissible.
void validate(const BoundarySet& boundaries);

enum class PartitionKind { NoRays, LeftRay, RightRay, BothRays };

const char* to_string(PartitionKind kind);

/// One Fourier support [lower, upper] with its band index.
///
/// Rays keep only their finite endpoint; the other one is meaningless.
/// Membership tests are half-open, [lower, upper), so that adjacent supports
/// tile the line without double counting the shared boundary.
struct Support {
  int index = 0;
  double lower = 0.0;
  double upper = 0.0;
  bool leftRay = false;
  bool rightRay = false;
  double center = std::numeric_limits<double>::quiet_NaN();

  bool isRay() const { return leftRay || rightRay; }
  bool isCompact() const { return !isRay(); }
  double length() const {
    return isRay() ? std::numeric_limits<double>::infinity() : upper - lower;
  }
  bool contains(double xi) const {
    if (leftRay) return xi < upper;
    if (rightRay) return xi >= lower;
    return xi >= lower && xi < upper;
  }
};

class Partition {
public:
  Partition() = default;

  PartitionKind kind() const { return kind_; }
  BoundaryVariant variant() const { return boundaries_.variant; }
  const BoundarySet& boundaries() const { return boundaries_; }
  std::span<const Support> supports() const { return supports_; }
  const Support& support(int index) const;
  bool hasCenters() const { return centered_; }

  /// Extent of the compact supports: [first finite point, last finite point].
  double compactLower() const { return boundaries_.points.front(); }
  double compactUpper() const { return boundaries_.points.back(); }

  /// All boundary points in order, with +-inf at the ray ends.
  std::vector<double> collectBoundaries() const;

private:
  friend Partition buildPartition(const BoundarySet&);
  friend Partition computeCenters(Partition);

  BoundarySet boundaries_;
  PartitionKind kind_ = PartitionKind::NoRays;
  std::vector<Support> supports_;
  bool centered_ = false;
};

Partition buildPartition(const BoundarySet& boundaries);

/// Midpoints for compact supports, mirrored neighbour centres for rays.
Partition computeCenters(Partition partition);

enum class GammaLabel { Full, Lray, Rray, C };

const char* to_string(GammaLabel label);

/// The part of the line a system targets once ray supports are dropped.
///
/// `lower`/`upper` always record the finite extent of the compact supports.
/// Only the sides that had a ray are actually bounded: Lray is [lower, inf),
/// Rray is (-inf, upper), C is [lower, upper) and Full is the whole line.
struct GammaRegion {
  GammaLabel label = GammaLabel::Full;
  double lower = 0.0;
  double upper = 0.0;

  bool boundedBelow() const { return label == GammaLabel::Lray || label == GammaLabel::C; }
  bool boundedAbove() const { return label == GammaLabel::Rray || label == GammaLabel::C; }
  bool contains(double xi) const {
    return (!boundedBelow() || xi >= lower) && (!boundedAbove() || xi < upper);
  }
};

GammaRegion gammaRegion(const Partition& partition);

/// Magnitude spectrum sampled on a uniform, increasing frequency grid.
struct MagnitudeSpectrum {
  std::vector<double> frequency;
  std::vector<double> magnitude;
};

/// Places `bandCount` positive boundaries at the lowest minima between the
/// `bandCount` largest local maxima (the last one between the final maximum
/// and the right edge), mirrors them to negative frequencies and closes the
/// set with 0 and both rays.
BoundarySet detectBoundaries(const MagnitudeSpectrum& spectrum, int bandCount);

}  // namespace ewf
