// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ewf/partition.hpp"
#include "ewf/rational.hpp"
#include "ewf/wavelet.hpp"

namespace ewf {

/// Translation step b_n, optionally carried as an exact fraction.
struct ShiftStep {
  double value = 1.0;
  std::optional<Rational> exact;

  static ShiftStep fraction(std::int64_t p, std::int64_t q) {
    Rational r(p, q);
    return {r.value(), r};
  }
};

/// How translation steps b_n are chosen.
///
/// ReciprocalSupport: b_n = 1/|S_n| for compact S, and
/// b_n = 1/(|a_n| (|E| + 2r)) otherwise, with margin r defaulting to |E|/2.
/// Explicit: one step per non-excluded band, in band order.
struct ShiftRule {
  enum class Kind { ReciprocalSupport, Explicit };
  Kind kind = Kind::ReciprocalSupport;
  std::vector<ShiftStep> steps;
  std::optional<double> margin;

  static ShiftRule reciprocal(std::optional<double> margin = std::nullopt) {
    return {Kind::ReciprocalSupport, {}, margin};
  }
  static ShiftRule explicitSteps(std::vector<ShiftStep> steps) {
    return {Kind::Explicit, std::move(steps), std::nullopt};
  }
};

struct SystemOptions {
  ShiftRule shiftRule;
  /// gamma >= 1 in |S_n| = gamma |Omega_n| for compact profiles.
  double overlap = 1.0;
  /// Replace a_n for the given band indices after the rules ran. Meant for
  /// diagnostics; the frame checks will reject illegal values.
  std::map<int, double> scaleOverrides;
};

/// One band of the system: centre omega_n, scale a_n, shift step b_n.
struct BandAtom {
  int index = 0;
  double center = 0.0;
  double scale = 1.0;
  ShiftStep shift;
  bool excluded = false;
  bool ray = false;

  double shiftStep() const { return shift.value; }
};

class EmpiricalWaveletSystem {
public:
  const Partition& partition() const { return partition_; }
  const MotherWavelet& wavelet() const { return wavelet_; }
  const GammaRegion& gamma() const { return gamma_; }
  std::span<const BandAtom> atoms() const { return atoms_; }
  const BandAtom& atom(int index) const;

  /// Non-excluded atoms in band order.
  std::vector<BandAtom> activeAtoms() const;

  /// psi_hat_n(xi) = |a_n|^{-1/2} psi_hat((xi - omega_n)/a_n).
  Complex filter(const BandAtom& atom, double xi) const {
    return wavelet_((xi - atom.center) / atom.scale) / std::sqrt(std::abs(atom.scale));
  }

  /// psi_hat((xi - omega_n)/a_n) without the |a_n|^{-1/2} normalisation.
  Complex core(const BandAtom& atom, double xi) const {
    return wavelet_((xi - atom.center) / atom.scale);
  }

  /// Frequencies outside this interval see |core| below the wavelet's tail
  /// threshold: omega_n + a_n * reach(psi_hat).
  Interval atomReach(const BandAtom& atom) const;

  /// Same atoms with a different mother profile (e.g. psi_hat scaled by c).
  EmpiricalWaveletSystem withWavelet(MotherWavelet wavelet) const;

private:
  friend EmpiricalWaveletSystem buildSystem(const Partition&, const MotherWavelet&,
                                            const SystemOptions&);
  EmpiricalWaveletSystem(Partition p, MotherWavelet w) : partition_(std::move(p)), wavelet_(std::move(w)) {}

  Partition partition_;
  MotherWavelet wavelet_;
  GammaRegion gamma_;
  std::vector<BandAtom> atoms_;
};

/// Assigns (omega_n, a_n, b_n) to every support of a centred partition.
/// Ray bands are excluded exactly when the wavelet is compactly supported.
EmpiricalWaveletSystem buildSystem(const Partition& partition, const MotherWavelet& wavelet,
                                   const SystemOptions& options = {});

/// Samples psi_hat_n on the given frequencies. Throws ExcludedBand.
Eigen::VectorXcd filterSpectrum(const EmpiricalWaveletSystem& system, int band,
                                const Eigen::VectorXd& frequencies);

}  // namespace ewf
