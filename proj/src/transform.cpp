// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/transform.hpp"

#include <cmath>
#include <string>

#include "ewf/error.hpp"

namespace ewf {

namespace {

constexpr double kStrideTol = 1e-9;

Eigen::VectorXcd sampledFilter(const EmpiricalWaveletSystem& system, const BandAtom& atom,
                               const Eigen::VectorXd& freqs) {
  Eigen::VectorXcd out(freqs.size());
  for (Eigen::Index j = 0; j < freqs.size(); ++j) out(j) = system.filter(atom, freqs(j));
  return out;
}

// Per-band CEWT on the whole grid: ifft(fft(f) * conj(psi_hat_n)).
template <typename PerBand>
void analyse(const SampledSignal& f, const EmpiricalWaveletSystem& system, PerBand&& perBand) {
  validate(f);
  const Eigen::VectorXcd fHat = fft(f.samples);
  const Eigen::VectorXd freqs = dftFrequencies(f.size(), f.sampleInterval);
  for (const auto& atom : system.atoms()) {
    if (atom.excluded) continue;
    const Eigen::VectorXcd filt = sampledFilter(system, atom, freqs);
    perBand(atom, Eigen::VectorXcd(ifft(fHat.cwiseProduct(filt.conjugate()))));
  }
}

}  // namespace

const char* to_string(CoefficientMode mode) {
  return mode == CoefficientMode::Discrete ? "dewt" : "cewt";
}

double CoefficientSet::energy() const {
  double e = 0.0;
  for (const auto& b : bands) e += b.values.squaredNorm();
  return e;
}

const BandCoefficients& CoefficientSet::band(int index) const {
  for (const auto& b : bands) {
    if (b.index == index) return b;
  }
  throw Error(ErrorCode::InvalidArgument, "no coefficients for band " + std::to_string(index));
}

Eigen::Index shiftStride(double shiftStep, double dt, Eigen::Index n) {
  const double ratio = std::abs(shiftStep) / dt;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > kStrideTol * rounded) {
    throw Error(ErrorCode::IncommensurateShiftStep,
                "shift step " + std::to_string(shiftStep) + " is not a whole number of samples (" +
                    std::to_string(ratio) + ")");
  }
  const auto stride = static_cast<Eigen::Index>(rounded);
  if (n % stride != 0) {
    throw Error(ErrorCode::IncommensurateShiftStep,
                "stride " + std::to_string(stride) + " does not divide the signal length " + std::to_string(n));
  }
  return stride;
}

CoefficientSet cewtForward(const SampledSignal& f, const EmpiricalWaveletSystem& system) {
  CoefficientSet out;
  out.mode = CoefficientMode::ContinuousGrid;
  out.sampleInterval = f.sampleInterval;
  out.signalLength = f.size();
  analyse(f, system, [&](const BandAtom& atom, Eigen::VectorXcd c) {
    out.bands.push_back({atom.index, f.sampleInterval, 1, std::move(c)});
  });
  return out;
}

CoefficientSet dewtForward(const SampledSignal& f, const EmpiricalWaveletSystem& system) {
  validate(f);
  // Check every stride before doing any work.
  for (const auto& atom : system.atoms()) {
    if (!atom.excluded) shiftStride(atom.shiftStep(), f.sampleInterval, f.size());
  }
  CoefficientSet out;
  out.mode = CoefficientMode::Discrete;
  out.sampleInterval = f.sampleInterval;
  out.signalLength = f.size();
  analyse(f, system, [&](const BandAtom& atom, const Eigen::VectorXcd& c) {
    const Eigen::Index stride = shiftStride(atom.shiftStep(), f.sampleInterval, f.size());
    const Eigen::Index count = f.size() / stride;
    Eigen::VectorXcd sub(count);
    for (Eigen::Index k = 0; k < count; ++k) sub(k) = c(k * stride);
    out.bands.push_back({atom.index, atom.shiftStep(), stride, std::move(sub)});
  });
  return out;
}

SampledSignal synthesize(const CoefficientSet& coeffs, const EmpiricalWaveletSystem& system) {
  const Eigen::Index n = coeffs.signalLength;
  const double dt = coeffs.sampleInterval;
  if (n < 2 || !(dt > 0.0)) throw Error(ErrorCode::SystemMismatch, "coefficient set has no signal grid");

  std::size_t active = 0;
  for (const auto& atom : system.atoms()) active += atom.excluded ? 0 : 1;
  if (coeffs.bands.size() != active) {
    throw Error(ErrorCode::SystemMismatch, "coefficient set has " + std::to_string(coeffs.bands.size()) +
                                               " bands, system has " + std::to_string(active));
  }

  const Eigen::VectorXd freqs = dftFrequencies(n, dt);
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
  for (const auto& band : coeffs.bands) {
    const auto& atom = system.atom(band.index);
    if (atom.excluded) throw Error(ErrorCode::SystemMismatch, "coefficients for an excluded band");
    const Eigen::Index stride =
        coeffs.mode == CoefficientMode::Discrete ? shiftStride(atom.shiftStep(), dt, n) : 1;
    if (stride != band.stride || band.values.size() * stride != n) {
      throw Error(ErrorCode::SystemMismatch,
                  "band " + std::to_string(band.index) + " does not match the system's shift step");
    }
    Eigen::VectorXcd up = Eigen::VectorXcd::Zero(n);
    for (Eigen::Index k = 0; k < band.values.size(); ++k) up(k * stride) = band.values(k);
    acc += fft(up).cwiseProduct(sampledFilter(system, atom, freqs));
  }
  // Continuous-grid coefficients carry the measure db = dt.
  const double weight = coeffs.mode == CoefficientMode::ContinuousGrid ? 1.0 : 1.0 / dt;
  return {ifft(acc) * weight, dt};
}

SampledSignal frameOperatorApply(const SampledSignal& f, const EmpiricalWaveletSystem& system) {
  return synthesize(dewtForward(f, system), system);
}

ReconstructResult reconstruct(const CoefficientSet& coeffs, const EmpiricalWaveletSystem& system,
                              const ReconstructOptions& options) {
  ReconstructResult result;
  if (options.lowerBound && !(*options.lowerBound > 0.0)) {
    result.warnings.push_back("NonPositiveLowerBound: frame analysis did not certify A > 0; "
                              "the solve may not converge to the analysed signal");
  }
  const SampledSignal rhs = synthesize(coeffs, system);
  const double dt = rhs.sampleInterval;
  const Eigen::Index n = rhs.size();
  const int maxIter = options.maxIterations > 0 ? options.maxIterations : static_cast<int>(10 * n);

  auto applyS = [&](const Eigen::VectorXcd& x) {
    CoefficientSet c = coeffs.mode == CoefficientMode::Discrete ? dewtForward({x, dt}, system)
                                                                : cewtForward({x, dt}, system);
    return synthesize(c, system).samples;
  };

  // Optional projection onto signals with spectrum in the gamma region.
  const Eigen::VectorXd freqs = dftFrequencies(n, dt);
  Eigen::VectorXd mask = Eigen::VectorXd::Ones(n);
  const auto& gamma = system.gamma();
  const bool restrict = options.restrictToGamma && (gamma.boundedBelow() || gamma.boundedAbove());
  if (restrict) {
    for (Eigen::Index j = 0; j < n; ++j) mask(j) = gamma.contains(freqs(j)) ? 1.0 : 0.0;
  }
  auto project = [&](const Eigen::VectorXcd& v) {
    return restrict ? Eigen::VectorXcd(ifft(fft(v).cwiseProduct(mask.cast<Complex>()))) : v;
  };

  const Eigen::VectorXcd b = project(rhs.samples);
  const double rhsNorm = b.norm();
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
  if (rhsNorm == 0.0) {
    result.signal = {x, dt};
    result.converged = true;
    return result;
  }

  Eigen::VectorXcd r = b;
  Eigen::VectorXcd p = r;
  double rr = r.squaredNorm();
  Eigen::VectorXcd best = x;
  double bestRes = 1.0;
  int it = 0;
  for (; it < maxIter; ++it) {
    const Eigen::VectorXcd q = project(applyS(p));
    const double pq = std::real(p.dot(q));
    if (!(pq > 0.0)) break;
    const double alpha = rr / pq;
    x += alpha * p;
    r -= alpha * q;
    const double rrNew = r.squaredNorm();
    const double rel = std::sqrt(rrNew) / rhsNorm;
    if (rel < bestRes) {
      bestRes = rel;
      best = x;
    }
    if (rel <= options.tolerance) {
      ++it;
      break;
    }
    p = r + (rrNew / rr) * p;
    rr = rrNew;
  }
  result.signal = {best, dt};
  result.iterations = it;
  result.relativeResidual = bestRes;
  result.converged = bestRes <= options.tolerance;
  return result;
}

}  // namespace ewf
