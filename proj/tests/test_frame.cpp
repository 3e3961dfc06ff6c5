// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ewf/error.hpp"
#include "ewf/frame.hpp"
#include "ewf/transform.hpp"
#include "fixtures.hpp"

using namespace ewf;
using namespace ewf::testing;

namespace {

ErrorCode codeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ewf::Error");
  return ErrorCode::InvalidArgument;
}

const FrequencyGrid kUnitGrid{-8.0, 8.0, 1 << 14};
const FrequencyGrid kGaussGrid{-2.0, 2.0, 1 << 12};

}  // namespace

TEST_CASE("evaluation domain") {
  const auto d = evaluationDomain(gaussianRaySystem(), Interval{-10, 10});
  CHECK((d.lower == -2.0 && d.upper == 2.0));
  const auto full = evaluationDomain(shannonUnitSystem(), Interval{-3, 5});
  CHECK((full.lower == -3.0 && full.upper == 5.0));
  const auto def = evaluationDomain(shannonUnitSystem());
  CHECK((def.lower == -8.0 && def.upper == 8.0));
  CHECK(codeOf([] { evaluationDomain(gaussianRaySystem(), Interval{5, 10}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Parseval sum") {
  const auto s = parsevalSum(shannonUnitSystem(), kUnitGrid);
  CHECK(s.deviation == 0.0);
  CHECK(s.bands.size() == 16);

  // Forcing a_n = 2 dilates every indicator to width 2: the interior is
  // covered twice at weight 1/2, the outermost half-bands only once.
  SystemOptions opts;
  for (int n = -8; n < 8; ++n) opts.scaleOverrides[n] = 2.0;
  const auto forced = buildSystem(buildPartition(unitBoundaries()), shannonWavelet(), opts);
  const auto fs = parsevalSum(forced, kUnitGrid);
  CHECK(fs.deviation == doctest::Approx(0.5));
  CHECK(fs.signedSum(kUnitGrid.points / 2) == doctest::Approx(1.0));
  CHECK(fs.signedSum(kUnitGrid.points - 1) == doctest::Approx(0.5));

  SystemOptions meyer;
  meyer.overlap = 1.5;
  const auto m = buildSystem(buildPartition(unitBoundaries()), meyerWavelet(0.25), meyer);
  CHECK(parsevalSum(m, FrequencyGrid{-6, 6, 1 << 14}).deviation < 1e-10);

  SystemOptions bad;
  bad.scaleOverrides[0] = -1.0;
  const auto neg = buildSystem(buildPartition(unitBoundaries()), shannonWavelet(), bad);
  CHECK(codeOf([&] { parsevalSum(neg, kUnitGrid); }) == ErrorCode::NegativeScaleOnCompact);
}

TEST_CASE("signed and absolute sums differ for negative ray scales") {
  const SpectralProfile half = [](double xi) {
    return xi >= -1.0 ? Complex(std::exp(-std::numbers::pi * xi * xi)) : Complex(0.0);
  };
  const MotherWavelet w("half-gauss", half, SupportDescriptor::rightRay(-1.0), 0.01);
  const auto sys = buildSystem(buildPartition({{-2.0, 0.0, 2.0}, BoundaryVariant::Standard, true, false}), w);
  CHECK(sys.atoms().front().scale < 0.0);
  const auto s = parsevalSum(sys, FrequencyGrid{-2, 2, 1 << 12});
  CHECK(s.negativeRayScale);
  CHECK(s.absoluteDeviation != s.deviation);
}

TEST_CASE("cross terms") {
  const auto sys = shannonUnitSystem();
  const auto g0 = crossTermG(sys, 0.0, kUnitGrid);
  CHECK((g0.array() - 1.0).abs().maxCoeff() == 0.0);
  for (double a : {-3.0, 1.0, 2.0}) CHECK(crossTermG(sys, a, kUnitGrid).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(codeOf([&] { crossTermG(sys, 0.5, kUnitGrid); }) == ErrorCode::AlphaNotInLattice);

  const auto gauss = crossTermG(gaussianRaySystem(), 0.0, kGaussGrid);
  CHECK(gauss.real().minCoeff() > 0.0);
  CHECK(std::abs(gauss.real().maxCoeff() - 1.0) > 1e-3);
}

TEST_CASE("bounds") {
  const auto sys = shannonUnitSystem();
  CHECK(besselBoundB(sys, kUnitGrid, 4).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(lowerBoundA(sys, kUnitGrid, 4).value == doctest::Approx(1.0).epsilon(1e-10));
  const auto doubled = sys.withWavelet(sys.wavelet().scaled(2.0));
  CHECK(besselBoundB(doubled, kUnitGrid, 4).value == doctest::Approx(4.0).epsilon(1e-10));

  const auto gauss = gaussianRaySystem();
  const auto b = besselBoundB(gauss, kGaussGrid, 8);
  const auto a = lowerBoundA(gauss, kGaussGrid, 8);
  CHECK(a.value > 0.0);
  CHECK(a.value <= b.value);
  CHECK(b.tailEstimate <= kBoundTailTol * b.value);

  // b_n halved: reported, not compared.
  std::vector<ShiftStep> halved;
  for (const auto& at : gauss.activeAtoms()) halved.push_back({at.shiftStep() / 2});
  const auto hs = buildSystem(gauss.partition(), gauss.wavelet(), {ShiftRule::explicitSteps(halved)});
  const auto hb = besselBoundB(hs, kGaussGrid, 8);
  MESSAGE("B default " << b.value << ", B with halved b_n " << hb.value);
  CHECK(std::isfinite(hb.value));

  // Undersampled Shannon: b_n = 2 lets the k = +-1 translates overlap.
  const auto under = buildSystem(buildPartition(unitBoundaries()), shannonWavelet(),
                                 {ShiftRule::explicitSteps(std::vector<ShiftStep>(16, ShiftStep::fraction(2, 1)))});
  CHECK(lowerBoundA(under, kUnitGrid, 4).value <= 1e-12);
  CertifyOptions opts;
  opts.gridPoints = 1 << 12;
  CHECK(certify(under, {}, opts).verdict == Verdict::BesselOnly);

  // Zero margin puts translates close enough that K = 1 leaves a visible tail.
  const auto tight = buildSystem(gauss.partition(), gauss.wavelet(), {ShiftRule::reciprocal(0.0)});
  CHECK(codeOf([&] { besselBoundB(tight, kGaussGrid, 1); }) == ErrorCode::TruncationInsufficient);
}

TEST_CASE("LIC diagnostic") {
  const auto sys = shannonUnitSystem();
  CHECK(licDiagnostic(sys, SampledSignal{Eigen::VectorXcd::Zero(64), 1.0 / 16}).value == 0.0);

  // A single atom on 64 samples against a direct double sum.
  const Eigen::Index n = 64;
  const double dt = 1.0 / 16;
  const auto atom = fromSpectrum(filterSpectrum(sys, 1, dftFrequencies(n, dt)), dt);
  const auto lic = licDiagnostic(sys, atom, 4);
  const double pi = std::numbers::pi;
  double direct = 0.0;
  const double df = 1.0 / (n * dt);
  const Eigen::VectorXcd fhat = spectrum(atom);
  const double fmax = fhat.cwiseAbs().maxCoeff();
  for (const auto& at : sys.activeAtoms()) {
    for (int m = -4; m <= 4; ++m) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(fhat(j)) <= 1e-12 * fmax) continue;  // integrate over supp f_hat only
        const double xi = binFrequency(j, n, dt);
        const double target = xi + m / at.shiftStep();
        // f_hat at target by direct DFT, zero outside the grid band.
        if (target < -n / 2 * df || target >= n / 2 * df) continue;
        Complex fh = 0.0;
        for (Eigen::Index t = 0; t < n; ++t) fh += atom.samples(t) * std::polar(dt, -2 * pi * target * t * dt);
        direct += std::norm(fh) * std::norm(sys.core(at, xi)) / (at.shiftStep() * at.scale) * df;
      }
    }
  }
  CHECK(lic.value == doctest::Approx(direct).epsilon(1e-10));
  CHECK(std::isfinite(lic.value));

  const auto gauss = gaussianRaySystem();
  for (const auto& f : probes(gauss, {-10, 10}, 2, 6)) {
    const auto base = licDiagnostic(gauss, f);
    const auto twice = licDiagnostic(gauss, f, 2 * base.kRange);
    CHECK(std::abs(twice.value - base.value) <= 1e-9 * base.value);
  }
}

TEST_CASE("certify") {
  const auto sys = shannonUnitSystem();
  CertifyOptions opts;
  opts.window = Interval{-8, 8};
  opts.gridPoints = 1 << 13;
  const auto r = certify(sys, probes(sys, {-8, 8}, 5, 1), opts);
  CHECK(r.verdict == Verdict::ParsevalCertified);
  CHECK(r.energyRatios.size() == 5);
  for (double q : r.energyRatios) CHECK(std::abs(q - 1.0) < 1e-8);
  CHECK(r.licValues.size() == 5);

  const auto gauss = gaussianRaySystem();
  CertifyOptions g;
  g.window = Interval{-10, 10};
  g.gridPoints = 1 << 12;
  const auto gr = certify(gauss, probes(gauss, {-10, 10}, 3, 2), g);
  CHECK(gr.verdict == Verdict::FrameCertified);
  for (double q : gr.energyRatios) {
    CHECK(q >= gr.lowerA);
    CHECK(q <= *gr.besselB);
  }

  SystemOptions bad;
  bad.scaleOverrides[1] = -1.0;
  const auto corrupted = buildSystem(buildPartition(unitBoundaries()), shannonWavelet(), bad);
  CHECK(codeOf([&] { certify(corrupted, {}, opts); }) == ErrorCode::NegativeScaleOnCompact);

  // Probes reaching outside the domain are rejected.
  const auto outside = probes(sys, {-8, 8}, 1, 3);
  CertifyOptions narrow = opts;
  narrow.window = Interval{-2, 2};
  CHECK(codeOf([&] { certify(sys, outside, narrow); }) == ErrorCode::InvalidArgument);

  // A two-point grid misses the sup of the bound integrand entirely.
  CertifyOptions coarse = g;
  coarse.gridPoints = 1;
  CHECK(codeOf([&] { certify(gauss, probes(gauss, {-10, 10}, 3, 2), coarse); }) ==
        ErrorCode::InconsistentCertificate);
}

TEST_CASE("probe grids") {
  const auto gauss = gaussianRaySystem();
  const auto grid = chooseProbeGrid(gauss, {-10, 10});
  CHECK(grid.sampleInterval == 0.05);
  CHECK(grid.length == 4100);
  const auto ray = chooseProbeGrid(shannonRaySystem(), {-10, 10});
  CHECK(ray.sampleInterval == doctest::Approx(1.0 / 60));
  CHECK(ray.length % 60 == 0);
  std::mt19937_64 a(9), b(9);
  CHECK(randomBandlimitedSignal(a, grid, {-2, 2}).samples == randomBandlimitedSignal(b, grid, {-2, 2}).samples);
}
