// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ewf/error.hpp"
#include "ewf/transform.hpp"

namespace ewf {

namespace {

constexpr double kSupportThreshold = 1e-12;
constexpr double kOutsideEnergyTol = 1e-10;

double weight(const BandAtom& a) { return 1.0 / (std::abs(a.shiftStep()) * std::abs(a.scale)); }

struct BoundIntegrands {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd offDiagonal;
  Eigen::VectorXd tail;
};

BoundIntegrands boundIntegrands(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid, int kRange) {
  BoundIntegrands out{Eigen::VectorXd::Zero(grid.points), Eigen::VectorXd::Zero(grid.points),
                      Eigen::VectorXd::Zero(grid.points)};
  for (const auto& atom : system.atoms()) {
    if (atom.excluded) continue;
    const double w = weight(atom);
    const double period = 1.0 / atom.shiftStep();
    const auto [first, last] = grid.indexRange(system.atomReach(atom));
    for (Eigen::Index j = first; j < last; ++j) {
      const double xi = grid.at(j);
      const double c0 = std::abs(system.core(atom, xi));
      if (c0 == 0.0) continue;
      out.diagonal(j) += w * c0 * c0;
      for (int k = 1; k <= 2 * kRange; ++k) {
        const double shifted = std::abs(system.core(atom, xi - k * period)) +
                               std::abs(system.core(atom, xi + k * period));
        (k <= kRange ? out.offDiagonal(j) : out.tail(j)) += w * c0 * shifted;
      }
    }
  }
  return out;
}

enum class Extremum { Sup, Inf };

BoundEvaluation evaluateBound(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid, int kRange,
                              Extremum which) {
  if (kRange < 0) throw Error(ErrorCode::InvalidArgument, "kRange must be nonnegative");
  if (grid.points < 1) throw Error(ErrorCode::InvalidArgument, "empty frequency grid");
  auto once = [&](const FrequencyGrid& g, double& tail, double& upper) {
    const auto in = boundIntegrands(system, g, kRange);
    const Eigen::VectorXd sum = in.diagonal + in.offDiagonal;
    upper = sum.maxCoeff();
    tail = in.tail.maxCoeff();
    return which == Extremum::Sup ? upper : (in.diagonal - in.offDiagonal).minCoeff();
  };
  BoundEvaluation out;
  out.kRange = kRange;
  double tailCoarse = 0.0, tailFine = 0.0, upperCoarse = 0.0, upperFine = 0.0;
  const double coarse = once(grid, tailCoarse, upperCoarse);
  const double fine = once(grid.refined(), tailFine, upperFine);
  out.value = fine;
  out.refinementDelta = std::abs(fine - coarse);
  out.tailEstimate = std::max(tailCoarse, tailFine);
  if (out.tailEstimate > kBoundTailTol * std::max(upperFine, std::numeric_limits<double>::min())) {
    throw Error(ErrorCode::TruncationInsufficient,
                "tail estimate " + std::to_string(out.tailEstimate) + " exceeds tolerance; enlarge kRange beyond " +
                    std::to_string(kRange));
  }
  return out;
}

bool isIntegral(double x) { return std::abs(x - std::round(x)) <= kIntegralityTol * std::max(1.0, std::abs(x)); }

}  // namespace

Eigen::VectorXd FrequencyGrid::values() const {
  Eigen::VectorXd out(points);
  for (Eigen::Index j = 0; j < points; ++j) out(j) = at(j);
  return out;
}

std::pair<Eigen::Index, Eigen::Index> FrequencyGrid::indexRange(const Interval& interval) const {
  const double h = step();
  const double a = std::floor((interval.lower - lower) / h) - 1.0;
  const double b = std::ceil((interval.upper - lower) / h) + 2.0;
  const auto clamp = [&](double v) {
    return static_cast<Eigen::Index>(std::clamp(v, 0.0, static_cast<double>(points)));
  };
  return {clamp(a), clamp(b)};
}

Interval evaluationDomain(const EmpiricalWaveletSystem& system, std::optional<Interval> window) {
  const auto& g = system.gamma();
  double lo = g.boundedBelow() ? g.lower : -std::numeric_limits<double>::infinity();
  double hi = g.boundedAbove() ? g.upper : std::numeric_limits<double>::infinity();
  if (window) {
    if (!(window->lower < window->upper)) throw Error(ErrorCode::InvalidArgument, "window must satisfy lower < upper");
    lo = std::max(lo, window->lower);
    hi = std::min(hi, window->upper);
  } else {
    if (!std::isfinite(lo)) lo = g.lower;
    if (!std::isfinite(hi)) hi = g.upper;
  }
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "window does not meet the gamma region");
  return {lo, hi};
}

ParsevalSum parsevalSum(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid) {
  ParsevalSum out;
  out.signedSum = Eigen::VectorXd::Zero(grid.points);
  out.absoluteSum = Eigen::VectorXd::Zero(grid.points);
  for (const auto& atom : system.atoms()) {
    if (atom.excluded) continue;
    if (atom.scale < 0.0 && !atom.ray) {
      throw Error(ErrorCode::NegativeScaleOnCompact,
                  "band " + std::to_string(atom.index) + " is compact but has a_n = " + std::to_string(atom.scale));
    }
    const auto [first, last] = grid.indexRange(system.atomReach(atom));
    if (first >= last) continue;
    out.bands.push_back(atom.index);
    if (atom.scale < 0.0) out.negativeRayScale = true;
    for (Eigen::Index j = first; j < last; ++j) {
      const double m = std::norm(system.core(atom, grid.at(j)));
      out.signedSum(j) += m / atom.scale;
      out.absoluteSum(j) += m / std::abs(atom.scale);
    }
  }
  out.deviation = (out.signedSum.array() - 1.0).abs().maxCoeff();
  out.absoluteDeviation = (out.absoluteSum.array() - 1.0).abs().maxCoeff();
  return out;
}

Eigen::VectorXcd crossTermG(const EmpiricalWaveletSystem& system, double alpha, const FrequencyGrid& grid) {
  const auto members = latticeMembers(system, alpha);
  if (members.empty()) {
    throw Error(ErrorCode::AlphaNotInLattice, "alpha = " + std::to_string(alpha) + " is in no b_n^{-1} Z");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(grid.points);
  for (int n : members) {
    const auto& atom = system.atom(n);
    const double w = weight(atom);
    const auto [first, last] = grid.indexRange(system.atomReach(atom));
    for (Eigen::Index j = first; j < last; ++j) {
      const double xi = grid.at(j);
      const Complex c0 = system.core(atom, xi);
      if (c0 == Complex(0.0, 0.0)) continue;
      out(j) += w * c0 * std::conj(system.core(atom, xi + alpha));
    }
  }
  return out;
}

BoundEvaluation besselBoundB(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid, int kRange) {
  return evaluateBound(system, grid, kRange, Extremum::Sup);
}

BoundEvaluation lowerBoundA(const EmpiricalWaveletSystem& system, const FrequencyGrid& grid, int kRange) {
  return evaluateBound(system, grid, kRange, Extremum::Inf);
}

LicEvaluation licDiagnostic(const EmpiricalWaveletSystem& system, const SampledSignal& probe, int kRange) {
  validate(probe);
  if (kRange < 0) throw Error(ErrorCode::InvalidArgument, "kRange must be nonnegative");
  const Eigen::Index n = probe.size();
  const double dt = probe.sampleInterval;
  const Eigen::VectorXcd spec = spectrum(probe);

  // Natural (non-periodic) frequency order: position i <-> signed bin i - half.
  const Eigen::Index half = n / 2;
  Eigen::VectorXd power(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index k = i - half;
    power(i) = std::norm(spec((k % n + n) % n));
  }
  const double df = 1.0 / (static_cast<double>(n) * dt);
  const double peak = power.maxCoeff();
  LicEvaluation out;
  if (peak == 0.0) {
    out.kRange = kRange;
    return out;
  }
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (power(i) > kSupportThreshold * kSupportThreshold * peak) support.push_back(i);
  }
  const double span = static_cast<double>(support.back() - support.front());

  const auto atoms = system.activeAtoms();
  if (kRange == 0) {
    double minShiftBins = std::numeric_limits<double>::infinity();
    for (const auto& a : atoms) minShiftBins = std::min(minShiftBins, 1.0 / (std::abs(a.shiftStep()) * df));
    kRange = static_cast<int>(std::ceil(span / minShiftBins)) + 1;
  }
  out.kRange = kRange;

  auto powerAt = [&](double pos) {
    if (pos < 0.0 || pos > static_cast<double>(n - 1)) return 0.0;
    const double lo = std::floor(pos);
    const auto i = static_cast<Eigen::Index>(lo);
    const double t = pos - lo;
    if (t == 0.0 || i + 1 >= n) return power(i);
    return (1.0 - t) * power(i) + t * power(i + 1);
  };

  double total = 0.0;
  double tail = 0.0;
  for (const auto& atom : atoms) {
    const double w = weight(atom);
    double shiftBins = 1.0 / (std::abs(atom.shiftStep()) * df);
    if (isIntegral(shiftBins)) shiftBins = std::round(shiftBins);
    for (Eigen::Index i : support) {
      const double xi = static_cast<double>(i - half) * df;
      const double g = w * std::norm(system.core(atom, xi));
      if (g == 0.0) continue;
      for (int m = -2 * kRange; m <= 2 * kRange; ++m) {
        const double term = powerAt(static_cast<double>(i) + m * shiftBins) * g * df;
        (std::abs(m) <= kRange ? total : tail) += term;
      }
    }
  }
  out.value = total;
  out.tailEstimate = tail;
  return out;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::ParsevalCertified: return "ParsevalCertified";
    case Verdict::FrameCertified: return "FrameCertified";
    case Verdict::BesselOnly: return "BesselOnly";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

FrameReport certify(const EmpiricalWaveletSystem& system, const std::vector<SampledSignal>& probes,
                    const CertifyOptions& options) {
  FrameReport report;
  report.domain = evaluationDomain(system, options.window);
  report.gridPoints = options.gridPoints;
  report.kRange = options.kRange;
  const FrequencyGrid grid{report.domain.lower, report.domain.upper, options.gridPoints};
  const FrequencyGrid fine = grid.refined();

  const auto coarseSum = parsevalSum(system, grid);
  const auto fineSum = parsevalSum(system, fine);
  report.bands = fineSum.bands;
  report.parsevalSumDeviation = std::max(coarseSum.deviation, fineSum.deviation);
  report.parsevalSumAbsoluteDeviation = std::max(coarseSum.absoluteDeviation, fineSum.absoluteDeviation);
  if (fineSum.negativeRayScale) {
    report.warnings.push_back("a ray band in the domain has a_n < 0; the Parseval sum is reported with 1/a_n "
                              "(signed) and 1/|a_n| (absolute)");
  }

  report.alphaHalfWidth =
      options.alphaHalfWidth > 0.0 ? options.alphaHalfWidth : report.domain.upper - report.domain.lower;
  const auto lattice = buildAlphaLattice(system, report.alphaHalfWidth);
  report.exactLattice = lattice.exact;
  for (const auto& e : lattice.elements) {
    const Eigen::VectorXcd g = crossTermG(system, e.value, fine);
    const bool zero = e.exact ? e.exact->num == 0 : e.value == 0.0;
    const double residual = (g.array() - Complex(zero ? 1.0 : 0.0, 0.0)).abs().maxCoeff();
    report.crossTermResiduals.emplace_back(e.value, residual);
    report.maxCrossTermResidual = std::max(report.maxCrossTermResidual, residual);
  }

  try {
    const auto b = besselBoundB(system, grid, options.kRange);
    report.besselB = b.value;
    report.besselTail = b.tailEstimate;
    report.besselRefinementDelta = b.refinementDelta;
    const auto a = lowerBoundA(system, grid, options.kRange);
    report.lowerA = a.value;
    report.lowerTail = a.tailEstimate;
    report.lowerRefinementDelta = a.refinementDelta;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::TruncationInsufficient) throw;
    report.besselB.reset();
    report.lowerA = -std::numeric_limits<double>::infinity();
    report.warnings.push_back(err.what());
  }

  const bool parseval = report.maxCrossTermResidual <= kKroneckerTol;
  if (parseval) {
    report.verdict = Verdict::ParsevalCertified;
  } else if (report.besselB && report.lowerA > 0.0) {
    report.verdict = Verdict::FrameCertified;
  } else if (report.besselB) {
    report.verdict = Verdict::BesselOnly;
  } else {
    report.verdict = Verdict::Indeterminate;
  }

  for (std::size_t p = 0; p < probes.size(); ++p) {
    const auto& f = probes[p];
    validate(f);
    const Eigen::VectorXcd spec = spectrum(f);
    double inside = 0.0;
    double outside = 0.0;
    for (Eigen::Index j = 0; j < f.size(); ++j) {
      const double xi = binFrequency(j, f.size(), f.sampleInterval);
      (xi >= report.domain.lower && xi < report.domain.upper ? inside : outside) += std::norm(spec(j));
    }
    if (outside > kOutsideEnergyTol * (inside + outside)) {
      throw Error(ErrorCode::InvalidArgument,
                  "probe " + std::to_string(p) + " has spectral energy outside the evaluation domain");
    }
    report.licValues.push_back(licDiagnostic(system, f).value);
    const double energy = f.energy();
    const double ratio = energy > 0.0 ? dewtForward(f, system).energy() / energy : 0.0;
    report.energyRatios.push_back(ratio);
    if (energy == 0.0) continue;

    const bool ok = [&] {
      if (parseval) return std::abs(ratio - 1.0) <= kEnergyRatioTol;
      if (!report.besselB) return true;
      const bool upperOk = ratio <= *report.besselB * (1.0 + kEnergyRatioTol);
      const bool lowerOk = report.lowerA <= 0.0 || ratio >= report.lowerA * (1.0 - kEnergyRatioTol);
      return upperOk && lowerOk;
    }();
    if (!ok) {
      throw Error(ErrorCode::InconsistentCertificate,
                  "probe " + std::to_string(p) + " energy ratio " + std::to_string(ratio) +
                      " violates the computed bounds; refine the grid or enlarge kRange");
    }
  }
  return report;
}

ProbeGrid chooseProbeGrid(const EmpiricalWaveletSystem& system, const Interval& window, Eigen::Index minLength) {
  const double nyquist = std::max(std::abs(window.lower), std::abs(window.upper));
  if (!(nyquist > 0.0) || !std::isfinite(nyquist)) throw Error(ErrorCode::InvalidArgument, "window must be finite");
  const double base = 1.0 / (2.0 * nyquist);
  const auto atoms = system.activeAtoms();
  for (int refine = 1; refine <= 64; ++refine) {
    const double dt = base / refine;
    Eigen::Index lcm = 1;
    bool ok = true;
    for (const auto& a : atoms) {
      const double ratio = std::abs(a.shiftStep()) / dt;
      if (!isIntegral(ratio) || std::round(ratio) < 1.0) {
        ok = false;
        break;
      }
      lcm = std::lcm(lcm, static_cast<Eigen::Index>(std::round(ratio)));
    }
    if (!ok) continue;
    const Eigen::Index length = ((std::max<Eigen::Index>(minLength, 2) + lcm - 1) / lcm) * lcm;
    return {dt, length};
  }
  throw Error(ErrorCode::IncommensurateShiftStep, "no sample interval puts every shift step on the grid");
}

SampledSignal randomBandlimitedSignal(std::mt19937_64& rng, const ProbeGrid& grid, const Interval& domain) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd spec = Eigen::VectorXcd::Zero(grid.length);
  for (Eigen::Index j = 0; j < grid.length; ++j) {
    const double xi = binFrequency(j, grid.length, grid.sampleInterval);
    if (xi >= domain.lower && xi < domain.upper) {
      const double re = normal(rng);
      const double im = normal(rng);
      spec(j) = Complex(re, im);
    }
  }
  return {ifft(spec), grid.sampleInterval};
}

}  // namespace ewf
