// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "ewf/error.hpp"
#include "ewf/frame.hpp"
#include "ewf/transform.hpp"
#include "fixtures.hpp"

using namespace ewf;
using namespace ewf::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const Interval kUnitWindow{-8.0, 8.0};
const Interval kGaussWindow{-10.0, 10.0};

// 1. Continuous Parseval sum on the unit Shannon system.
Outcome parsevalSumCriterion() {
  const auto t0 = Clock::now();
  const auto sys = shannonUnitSystem();
  const FrequencyGrid grid{kUnitWindow.lower, kUnitWindow.upper, Eigen::Index{1} << 16};
  const auto s = parsevalSum(sys, grid);
  const double t = seconds(t0);
  return {s.deviation < 1e-12 && t < 5.0, fmt("sup|s-1| = %.3e, runtime %.2f s", s.deviation, t)};
}

// 2. Discrete Parseval certification over alpha in [-4, 4].
Outcome latticeCriterion() {
  const auto sys = shannonUnitSystem();
  CertifyOptions opts;
  opts.window = kUnitWindow;
  opts.alphaHalfWidth = 4.0;
  const auto r = certify(sys, {}, opts);
  return {r.maxCrossTermResidual < 1e-10 && r.verdict == Verdict::ParsevalCertified &&
              r.crossTermResiduals.size() == 9,
          fmt("%zu lattice points, max|G-delta| = %.3e, verdict %s", r.crossTermResiduals.size(),
              r.maxCrossTermResidual, to_string(r.verdict))};
}

// 3. Energy identity for 20 seeded probes at N = 4096.
Outcome energyCriterion() {
  const auto t0 = Clock::now();
  const auto sys = shannonUnitSystem();
  const auto fs = probes(sys, kUnitWindow, 20, 20260101);
  double worst = 0.0;
  for (const auto& f : fs) worst = std::max(worst, std::abs(dewtForward(f, sys).energy() / f.energy() - 1.0));
  const double t = seconds(t0);
  return {worst < 1e-6 && t < 10.0 && fs.front().size() == 4096,
          fmt("N = %ld, max|ratio-1| = %.3e, runtime %.2f s", static_cast<long>(fs.front().size()), worst, t)};
}

// 4. Frame bounds for the Gaussian ray system.
Outcome boundsCriterion() {
  const auto sys = gaussianRaySystem();
  CertifyOptions opts;
  opts.window = kGaussWindow;
  const auto fs = probes(sys, kGaussWindow, 20, 7);
  const auto r = certify(sys, fs, opts);
  if (!r.besselB) return {false, "B not computed"};
  const double a = r.lowerA, b = *r.besselB;
  bool inside = true;
  double lo = INFINITY, hi = -INFINITY;
  for (double q : r.energyRatios) {
    inside = inside && q >= a * (1 - 1e-6) && q <= b * (1 + 1e-6);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  return {a > 0.0 && a <= b && inside && r.energyRatios.size() == 20,
          fmt("A = %.6f, B = %.6f, ratios in [%.6f, %.6f], verdict %s", a, b, lo, hi, to_string(r.verdict))};
}

// 5. Reconstruction for the Gaussian and unit Shannon systems.
Outcome reconstructionCriterion() {
  const auto gauss = gaussianRaySystem();
  const auto f = probes(gauss, kGaussWindow, 1, 11).front();
  ReconstructOptions opts;
  opts.tolerance = 1e-12;
  const auto r = reconstruct(dewtForward(f, gauss), gauss, opts);
  const double eg = relativeError(r.signal, f);

  const auto shannon = shannonUnitSystem();
  const auto h = probes(shannon, kUnitWindow, 1, 12).front();
  const double es = relativeError(synthesize(dewtForward(h, shannon), shannon), h);
  return {eg <= 1e-6 && r.converged && es <= 1e-8,
          fmt("gaussian CG: %d iterations, residual %.2e, error %.3e; shannon single pass error %.3e", r.iterations,
              r.relativeResidual, eg, es)};
}

// 6. Ray exclusion with a compactly supported profile.
Outcome rayExclusionCriterion() {
  const auto sys = shannonRaySystem();
  int excluded = 0;
  bool raysExcluded = true;
  for (const auto& a : sys.atoms()) {
    excluded += a.excluded ? 1 : 0;
    raysExcluded = raysExcluded && (a.ray == a.excluded);
  }
  CertifyOptions opts;
  opts.window = kGaussWindow;
  const auto fs = probes(sys, kGaussWindow, 4, 3);
  const auto r = certify(sys, fs, opts);
  const bool gammaC = sys.gamma().label == GammaLabel::C && r.domain.lower == -2.0 && r.domain.upper == 3.0;
  return {raysExcluded && excluded == 2 && gammaC && r.maxCrossTermResidual < 1e-10 &&
              r.verdict == Verdict::ParsevalCertified,
          fmt("%d ray atoms excluded, gamma %s = [%g, %g), max|G-delta| = %.3e, verdict %s", excluded,
              to_string(sys.gamma().label), r.domain.lower, r.domain.upper, r.maxCrossTermResidual,
              to_string(r.verdict))};
}

// 7. FFT path against direct double sums, and the adjoint dot-test.
Outcome oracleCriterion() {
  const auto sys = shannonUnitSystem();
  const Eigen::Index n = 64;
  const double dt = 1.0 / 16.0;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  SampledSignal f{Eigen::VectorXcd(n), dt};
  for (Eigen::Index m = 0; m < n; ++m) f.samples(m) = {g(rng), g(rng)};

  const auto coeffs = dewtForward(f, sys);
  const double pi = std::acos(-1.0);
  double worst = 0.0;
  for (const auto& band : coeffs.bands) {
    const auto& atom = sys.atom(band.index);
    // Atom on the grid: h(m) = (1/N) sum_j psi_hat_n(xi_j) e^{2 pi i j m / N}.
    Eigen::VectorXcd h(n);
    for (Eigen::Index m = 0; m < n; ++m) {
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        acc += sys.filter(atom, binFrequency(j, n, dt)) * std::polar(1.0, 2 * pi * double(j * m) / double(n));
      }
      h(m) = acc / double(n);
    }
    for (Eigen::Index k = 0; k < band.values.size(); ++k) {
      Complex c = 0.0;
      for (Eigen::Index m = 0; m < n; ++m) c += f.samples(m) * std::conj(h(((m - k * band.stride) % n + n) % n));
      worst = std::max(worst, std::abs(c - band.values(k)));
    }
  }

  CoefficientSet d = coeffs;
  for (auto& band : d.bands) {
    for (Eigen::Index k = 0; k < band.values.size(); ++k) band.values(k) = {g(rng), g(rng)};
  }
  Complex lhs = 0.0;
  for (std::size_t b = 0; b < coeffs.bands.size(); ++b) lhs += d.bands[b].values.dot(coeffs.bands[b].values);
  const Complex rhs = inner(f, synthesize(d, sys));
  double dNorm = 0.0;
  for (const auto& band : d.bands) dNorm += band.values.squaredNorm();
  const double dot = std::abs(lhs - rhs) / (std::sqrt(f.energy()) * std::sqrt(dNorm));
  return {worst < 1e-10 && dot < 1e-10, fmt("max|fft - direct| = %.3e, adjoint mismatch %.3e", worst, dot)};
}

// 8. Scaling psi_hat by 3 multiplies A, B and energy ratios by 9.
Outcome homogeneityCriterion() {
  const auto sys = gaussianRaySystem();
  const auto scaled = sys.withWavelet(sys.wavelet().scaled(3.0));
  CertifyOptions opts;
  opts.window = kGaussWindow;
  const auto fs = probes(sys, kGaussWindow, 5, 99);
  const auto r1 = certify(sys, fs, opts);
  const auto r9 = certify(scaled, fs, opts);
  auto rel = [](double x, double y) { return std::abs(x - 9.0 * y) / std::abs(9.0 * y); };
  double worst = std::max(rel(r9.lowerA, r1.lowerA), rel(*r9.besselB, *r1.besselB));
  for (std::size_t i = 0; i < fs.size(); ++i) worst = std::max(worst, rel(r9.energyRatios[i], r1.energyRatios[i]));
  return {worst < 1e-10, fmt("max relative deviation from 9x = %.3e", worst)};
}

// 9. LIC diagnostic under doubled truncation, compact-support systems.
Outcome licCriterion() {
  double worst = 0.0;
  auto check = [&](const EmpiricalWaveletSystem& sys, const Interval& window) {
    for (const auto& f : probes(sys, window, 3, 17)) {
      const auto base = licDiagnostic(sys, f);
      const auto doubled = licDiagnostic(sys, f, 2 * base.kRange);
      worst = std::max(worst, std::abs(doubled.value - base.value) / base.value);
    }
  };
  check(shannonUnitSystem(), kUnitWindow);
  check(shannonRaySystem(), kGaussWindow);
  BoundarySet meyerB = unitBoundaries(6);
  check(buildSystem(buildPartition(meyerB), meyerWavelet(0.25), SystemOptions{ShiftRule::explicitSteps(
                                                                                    std::vector<ShiftStep>(12, ShiftStep::fraction(1, 2)))}),
        Interval{-6.0, 6.0});
  return {worst < 1e-9, fmt("max relative change = %.3e", worst)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 continuous Parseval sum", parsevalSumCriterion},
      {"2 discrete Parseval certification", latticeCriterion},
      {"3 energy identity", energyCriterion},
      {"4 Gaussian frame bounds", boundsCriterion},
      {"5 reconstruction", reconstructionCriterion},
      {"6 ray exclusion", rayExclusionCriterion},
      {"7 oracle equivalence", oracleCriterion},
      {"8 homogeneity", homogeneityCriterion},
      {"9 LIC stability", licCriterion},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
