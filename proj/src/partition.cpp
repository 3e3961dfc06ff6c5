// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ewf/error.hpp"

namespace ewf {

namespace {

// Band index of points[i]; the -inf point (if any) sits one below points[0].
std::vector<int> pointIndices(const BoundarySet& b) {
  const auto& p = b.points;
  std::vector<int> idx(p.size());
  if (b.variant == BoundaryVariant::Standard) {
    const auto zero = std::find(p.begin(), p.end(), 0.0) - p.begin();
    for (std::size_t i = 0; i < p.size(); ++i) idx[i] = static_cast<int>(i) - static_cast<int>(zero);
  } else {
    const auto negatives = static_cast<int>(
        std::count_if(p.begin(), p.end(), [](double v) { return v < 0.0; }));
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int k = static_cast<int>(i) - negatives;
      idx[i] = k < 0 ? k : k + 1;
    }
  }
  return idx;
}

}  // namespace

void validate(const BoundarySet& b) {
  const auto& p = b.points;
  for (double v : p) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument,
                  "boundary points must be finite; use leftInfinite/rightInfinite for rays");
    }
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!(p[i - 1] < p[i])) {
      throw Error(ErrorCode::NonMonotoneBoundaries,
                  "points must be strictly increasing (violated at position " + std::to_string(i) +
                      ")");
    }
  }
  const auto zeros = std::count(p.begin(), p.end(), 0.0);
  if (b.variant == BoundaryVariant::Standard) {
    if (zeros != 1) throw Error(ErrorCode::MissingZero, "standard boundary set must contain 0");
  } else {
    if (zeros != 0) throw Error(ErrorCode::InvalidArgument, "starred boundary set must not contain 0");
    const bool hasNeg = !p.empty() && p.front() < 0.0;
    const bool hasPos = !p.empty() && p.back() > 0.0;
    if (!hasNeg || !hasPos) {
      throw Error(ErrorCode::TooFewBoundaries,
                  "starred boundary set needs a negative and a positive point");
    }
  }
  if (p.size() < 2) {
    throw Error(ErrorCode::TooFewBoundaries, "at least two finite boundary points are required");
  }
}

const char* to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::NoRays: return "NoRays";
    case PartitionKind::LeftRay: return "LeftRay";
    case PartitionKind::RightRay: return "RightRay";
    case PartitionKind::BothRays: return "BothRays";
  }
  return "?";
}

const char* to_string(GammaLabel label) {
  switch (label) {
    case GammaLabel::Full: return "Full";
    case GammaLabel::Lray: return "Lray";
    case GammaLabel::Rray: return "Rray";
    case GammaLabel::C: return "C";
  }
  return "?";
}

const Support& Partition::support(int index) const {
  for (const auto& s : supports_) {
    if (s.index == index) return s;
  }
  throw Error(ErrorCode::InvalidArgument, "no support with index " + std::to_string(index));
}

std::vector<double> Partition::collectBoundaries() const {
  std::vector<double> out;
  if (boundaries_.leftInfinite) out.push_back(-std::numeric_limits<double>::infinity());
  out.insert(out.end(), boundaries_.points.begin(), boundaries_.points.end());
  if (boundaries_.rightInfinite) out.push_back(std::numeric_limits<double>::infinity());
  return out;
}

Partition buildPartition(const BoundarySet& boundaries) {
  validate(boundaries);

  Partition out;
  out.boundaries_ = boundaries;
  const auto& p = boundaries.points;
  const auto idx = pointIndices(boundaries);

  if (boundaries.leftInfinite) {
    Support s;
    s.index = idx.front() - 1;
    s.upper = p.front();
    s.lower = p.front();
    s.leftRay = true;
    out.supports_.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Support s;
    s.index = idx[i];
    s.lower = p[i];
    s.upper = p[i + 1];
    out.supports_.push_back(s);
  }
  if (boundaries.rightInfinite) {
    Support s;
    s.index = idx.back();
    s.lower = p.back();
    s.upper = p.back();
    s.rightRay = true;
    out.supports_.push_back(s);
  }

  if (boundaries.leftInfinite && boundaries.rightInfinite) {
    out.kind_ = PartitionKind::BothRays;
  } else if (boundaries.leftInfinite) {
    out.kind_ = PartitionKind::LeftRay;
  } else if (boundaries.rightInfinite) {
    out.kind_ = PartitionKind::RightRay;
  } else {
    out.kind_ = PartitionKind::NoRays;
  }
  return out;
}

Partition computeCenters(Partition partition) {
  const auto& p = partition.boundaries_.points;
  for (auto& s : partition.supports_) {
    if (s.isCompact()) {
      s.center = 0.5 * (s.lower + s.upper);
      continue;
    }
    // Mirror the adjacent compact support's half-width across the ray boundary.
    if (p.size() < 2) {
      throw Error(ErrorCode::RayWithoutNeighbor,
                  "ray support " + std::to_string(s.index) + " has no adjacent compact support");
    }
    if (s.leftRay) {
      s.center = 0.5 * (3.0 * p[0] - p[1]);
    } else {
      s.center = 0.5 * (3.0 * p[p.size() - 1] - p[p.size() - 2]);
    }
  }
  partition.centered_ = true;
  return partition;
}

GammaRegion gammaRegion(const Partition& partition) {
  GammaRegion g;
  g.lower = partition.compactLower();
  g.upper = partition.compactUpper();
  switch (partition.kind()) {
    case PartitionKind::NoRays: g.label = GammaLabel::Full; break;
    case PartitionKind::LeftRay: g.label = GammaLabel::Lray; break;
    case PartitionKind::RightRay: g.label = GammaLabel::Rray; break;
    case PartitionKind::BothRays: g.label = GammaLabel::C; break;
  }
  return g;
}

}  // namespace ewf
