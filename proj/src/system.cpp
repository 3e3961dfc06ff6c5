// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/system.hpp"

#include <cmath>
#include <string>

#include "ewf/error.hpp"

namespace ewf {

const BandAtom& EmpiricalWaveletSystem::atom(int index) const {
  for (const auto& a : atoms_) {
    if (a.index == index) return a;
  }
  throw Error(ErrorCode::InvalidArgument, "no band with index " + std::to_string(index));
}

std::vector<BandAtom> EmpiricalWaveletSystem::activeAtoms() const {
  std::vector<BandAtom> out;
  for (const auto& a : atoms_) {
    if (!a.excluded) out.push_back(a);
  }
  return out;
}

Interval EmpiricalWaveletSystem::atomReach(const BandAtom& atom) const {
  const auto& r = wavelet_.reach();
  const double x0 = atom.center + atom.scale * r.lower;
  const double x1 = atom.center + atom.scale * r.upper;
  return {std::min(x0, x1), std::max(x0, x1)};
}

EmpiricalWaveletSystem EmpiricalWaveletSystem::withWavelet(MotherWavelet wavelet) const {
  EmpiricalWaveletSystem out = *this;
  out.wavelet_ = std::move(wavelet);
  return out;
}

EmpiricalWaveletSystem buildSystem(const Partition& input, const MotherWavelet& wavelet,
                                   const SystemOptions& options) {
  const Partition partition = input.hasCenters() ? input : computeCenters(input);
  EmpiricalWaveletSystem sys(partition, wavelet);
  sys.gamma_ = gammaRegion(partition);

  const bool compact = wavelet.support().isCompact();
  for (const auto& s : partition.supports()) {
    BandAtom atom;
    atom.index = s.index;
    atom.center = s.center;
    atom.ray = s.isRay();
    atom.excluded = compact && s.isRay();
    if (!atom.excluded) {
      if (s.isRay()) {
        atom.scale = scaleFactorRay(s, wavelet);
      } else if (compact) {
        atom.scale = scaleFactorCompact(s, wavelet, options.overlap);
      } else {
        atom.scale = scaleFactorEssential(s, wavelet);
      }
    }
    sys.atoms_.push_back(atom);
  }

  for (const auto& [index, value] : options.scaleOverrides) {
    bool found = false;
    for (auto& a : sys.atoms_) {
      if (a.index != index) continue;
      if (value == 0.0 || !std::isfinite(value)) {
        throw Error(ErrorCode::InvalidArgument, "scale override must be finite and nonzero");
      }
      a.scale = value;
      found = true;
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "scale override for unknown band " + std::to_string(index));
  }

  std::size_t active = 0;
  for (const auto& a : sys.atoms_) active += a.excluded ? 0 : 1;
  if (active == 0) throw Error(ErrorCode::EmptySystem, "every band was excluded");

  const auto& rule = options.shiftRule;
  if (rule.kind == ShiftRule::Kind::Explicit) {
    if (rule.steps.size() != active) {
      throw Error(ErrorCode::InvalidArgument, "explicit shift list has " + std::to_string(rule.steps.size()) +
                                                  " entries for " + std::to_string(active) + " active bands");
    }
    std::size_t i = 0;
    for (auto& a : sys.atoms_) {
      if (a.excluded) continue;
      const auto& step = rule.steps[i++];
      if (step.value == 0.0 || !std::isfinite(step.value)) {
        throw Error(ErrorCode::InvalidArgument, "shift steps must be finite and nonzero");
      }
      a.shift = step;
    }
  } else {
    double widthFactor = 0.0;
    if (compact) {
      widthFactor = wavelet.support().length();
    } else {
      if (!wavelet.essential()) throw Error(ErrorCode::EmptyEssentialSupport, "non-compact wavelet needs delta");
      const double e = wavelet.essential()->length();
      const double margin = rule.margin.value_or(0.5 * e);
      if (!(margin >= 0.0)) throw Error(ErrorCode::InvalidArgument, "margin must be nonnegative");
      widthFactor = e + 2.0 * margin;
    }
    for (auto& a : sys.atoms_) {
      if (a.excluded) continue;
      a.shift = ShiftStep{1.0 / (std::abs(a.scale) * widthFactor), std::nullopt};
    }
  }
  return sys;
}

Eigen::VectorXcd filterSpectrum(const EmpiricalWaveletSystem& system, int band,
                                const Eigen::VectorXd& frequencies) {
  const auto& atom = system.atom(band);
  if (atom.excluded) throw Error(ErrorCode::ExcludedBand, "band " + std::to_string(band) + " is excluded");
  Eigen::VectorXcd out(frequencies.size());
  for (Eigen::Index j = 0; j < frequencies.size(); ++j) out(j) = system.filter(atom, frequencies(j));
  return out;
}

}  // namespace ewf
