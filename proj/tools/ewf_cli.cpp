// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors
//
// ewf: command-line front end for empirical wavelet systems.
//
// Exit codes: 0 success, 2 validation, 3 numerical, 4 I/O,
// 5 certify verdict Indeterminate, 6 certify verdict BesselOnly.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ewf/error.hpp"
#include "ewf/frame.hpp"
#include "ewf/io.hpp"
#include "ewf/partition.hpp"
#include "ewf/system.hpp"
#include "ewf/transform.hpp"

namespace {

using namespace ewf;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIO = 4;
constexpr int kExitIndeterminate = 5;
constexpr int kExitBesselOnly = 6;

int exitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return kExitValidation;
    case ErrorKind::Numerical: return kExitNumerical;
    case ErrorKind::IO: return kExitIO;
  }
  return 1;
}

Eigen::Index defaultGridPoints() {
  if (const char* env = std::getenv("EWF_GRID_POINTS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 2) {
      throw Error(ErrorCode::InvalidArgument, std::string("EWF_GRID_POINTS must be an integer >= 2, got '") + env + "'");
    }
    return static_cast<Eigen::Index>(v);
  }
  return kDefaultGridPoints;
}

struct SystemInputs {
  std::string partition;
  std::string wavelet;
  std::vector<std::string> scaleOverrides;
};

void addSystemInputs(CLI::App* cmd, SystemInputs& in) {
  cmd->add_option("partition", in.partition, "Partition JSON")->required();
  cmd->add_option("wavelet", in.wavelet, "Wavelet config JSON")->required();
  cmd->add_option("--scale-override", in.scaleOverrides, "Replace a_n for band n (n=value); repeatable");
}

EmpiricalWaveletSystem loadSystem(const SystemInputs& in) {
  const auto boundaries = io::boundarySetFromJson(io::readJsonFile(in.partition));
  const auto config = io::readWaveletConfig(in.wavelet);
  auto options = io::makeSystemOptions(config);
  for (const auto& s : in.scaleOverrides) {
    const auto eq = s.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument(s);
      std::size_t used = 0;
      const int n = std::stoi(s.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument(s);
      options.scaleOverrides[n] = std::stod(s.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "--scale-override expects n=value, got '" + s + "'");
    }
  }
  return buildSystem(buildPartition(boundaries), io::makeWavelet(config), options);
}

std::optional<Interval> windowFrom(const std::vector<double>& w) {
  if (w.empty()) return std::nullopt;
  return Interval{w[0], w[1]};
}

void emitJson(const std::string& out, const io::Json& j) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    io::writeJsonFile(out, j);
  }
}

double relativeError(const SampledSignal& g, const SampledSignal& f) {
  const double denom = f.samples.norm();
  return denom > 0.0 ? (g.samples - f.samples).norm() / denom : g.samples.norm();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical wavelet systems: construction, transforms and frame certification"};
  app.require_subcommand(1);

  // detect
  std::string spectrumPath, detectOut;
  int bandCount = 0;
  auto* detect = app.add_subcommand("detect", "Detect a partition from a magnitude spectrum CSV");
  detect->add_option("spectrum", spectrumPath, "CSV with columns frequency, magnitude")->required();
  detect->add_option("--bands", bandCount, "Number of positive-frequency bands")->required();
  detect->add_option("-o,--output", detectOut, "Partition JSON output (default stdout)");

  // build
  SystemInputs buildIn;
  std::string buildOut;
  auto* build = app.add_subcommand("build", "Build the system and print its atoms");
  addSystemInputs(build, buildIn);
  build->add_option("-o,--output", buildOut, "System JSON output (default stdout)");

  // transform
  SystemInputs transformIn;
  std::string signalPath, transformOut, csvPrefix, mode = "dewt";
  bool roundTrip = false;
  auto* transform = app.add_subcommand("transform", "Forward transform of a signal");
  transform->add_option("signal", signalPath, "Signal (.csv or raw float64 with .json sidecar)")->required();
  addSystemInputs(transform, transformIn);
  transform->add_option("--mode", mode, "cewt or dewt")->check(CLI::IsMember({"cewt", "dewt"}));
  transform->add_option("-o,--output", transformOut, "Coefficient JSON envelope");
  transform->add_option("--csv-prefix", csvPrefix, "Also write one CSV per band with this prefix");
  transform->add_flag("--reconstruct", roundTrip, "Round-trip and print the relative error");

  // reconstruct
  SystemInputs reconIn;
  std::string coeffPath, reconOut;
  double reconTol = 1e-12;
  int reconIter = 0;
  auto* recon = app.add_subcommand("reconstruct", "Invert a coefficient envelope by conjugate gradients");
  recon->add_option("coefficients", coeffPath, "Coefficient JSON envelope")->required();
  addSystemInputs(recon, reconIn);
  recon->add_option("-o,--output", reconOut, "Signal output (.csv or raw)")->required();
  recon->add_option("--tolerance", reconTol, "Relative residual target");
  recon->add_option("--max-iterations", reconIter, "Iteration cap (0: 10 N)");

  // certify
  SystemInputs certIn;
  std::vector<double> window;
  std::string certOut;
  int probeCount = 8;
  std::uint64_t seed = 0;
  double alphaHalfWidth = 0.0;
  int kRange = 8;
  Eigen::Index gridPoints = 0;
  auto* certifyCmd = app.add_subcommand("certify", "Certify the frame conditions and write a report");
  addSystemInputs(certifyCmd, certIn);
  certifyCmd->add_option("--window", window, "Frequency window a b")->expected(2);
  certifyCmd->add_option("--probes", probeCount, "Number of random probe signals")->check(CLI::NonNegativeNumber);
  certifyCmd->add_option("--seed", seed, "Seed for probe generation");
  certifyCmd->add_option("--alpha-window", alphaHalfWidth, "Half-width of the alpha lattice window");
  certifyCmd->add_option("--k-range", kRange, "Truncation |k| <= K for the bounds")->check(CLI::NonNegativeNumber);
  certifyCmd->add_option("--grid-points", gridPoints, "Frequency grid resolution (env EWF_GRID_POINTS)");
  certifyCmd->add_option("-o,--output", certOut, "Report JSON output (default stdout)");

  // report-dump
  SystemInputs dumpIn;
  std::vector<double> dumpWindow;
  std::vector<double> dumpAlphas;
  std::string dumpOut;
  Eigen::Index dumpPoints = 0;
  auto* dump = app.add_subcommand("report-dump", "Dump s(xi) and G_alpha(xi) samples as CSV");
  addSystemInputs(dump, dumpIn);
  dump->add_option("--window", dumpWindow, "Frequency window a b")->expected(2);
  dump->add_option("--alpha", dumpAlphas, "Lattice points alpha to include; repeatable");
  dump->add_option("--grid-points", dumpPoints, "Frequency grid resolution (env EWF_GRID_POINTS)");
  dump->add_option("-o,--output", dumpOut, "CSV output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*detect) {
      const auto b = detectBoundaries(io::readSpectrumCsv(spectrumPath), bandCount);
      std::cerr << "boundaries:";
      for (double p : b.points) std::cerr << ' ' << p;
      std::cerr << '\n';
      emitJson(detectOut, io::toJson(b));
      return 0;
    }

    if (*build) {
      emitJson(buildOut, io::toJson(loadSystem(buildIn)));
      return 0;
    }

    if (*transform) {
      const auto system = loadSystem(transformIn);
      const auto f = io::readSignal(signalPath);
      const auto coeffs = mode == "cewt" ? cewtForward(f, system) : dewtForward(f, system);
      if (!transformOut.empty()) io::writeJsonFile(transformOut, io::toJson(coeffs));
      if (!csvPrefix.empty()) io::writeCoefficientCsv(csvPrefix, coeffs);
      std::cout << "bands " << coeffs.bands.size() << "\n";
      std::cout << "coefficient energy " << coeffs.energy() << "\n";
      std::cout << "signal energy " << f.energy() << "\n";
      if (roundTrip) {
        const auto r = reconstruct(coeffs, system);
        std::cout << "iterations " << r.iterations << "\n";
        std::cout << "relative error " << relativeError(r.signal, f) << "\n";
        for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
        if (!r.converged) throw Error(ErrorCode::NotConverged, "reconstruction residual " + std::to_string(r.relativeResidual));
      }
      return 0;
    }

    if (*recon) {
      const auto system = loadSystem(reconIn);
      const auto coeffs = io::coefficientsFromJson(io::readJsonFile(coeffPath));
      ReconstructOptions opts;
      opts.tolerance = reconTol;
      opts.maxIterations = reconIter;
      const auto r = reconstruct(coeffs, system, opts);
      io::writeSignal(reconOut, r.signal);
      std::cout << "iterations " << r.iterations << "\n";
      std::cout << "relative residual " << r.relativeResidual << "\n";
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
      if (!r.converged) throw Error(ErrorCode::NotConverged, "reconstruction residual " + std::to_string(r.relativeResidual));
      return 0;
    }

    if (*certifyCmd) {
      const auto system = loadSystem(certIn);
      CertifyOptions opts;
      opts.window = windowFrom(window);
      opts.alphaHalfWidth = alphaHalfWidth;
      opts.kRange = kRange;
      opts.gridPoints = gridPoints > 0 ? gridPoints : defaultGridPoints();
      const Interval domain = evaluationDomain(system, opts.window);

      std::vector<SampledSignal> probes;
      if (probeCount > 0) {
        const auto grid = chooseProbeGrid(system, opts.window.value_or(domain));
        std::mt19937_64 rng(seed);
        for (int i = 0; i < probeCount; ++i) probes.push_back(randomBandlimitedSignal(rng, grid, domain));
      }
      const auto report = certify(system, probes, opts);
      emitJson(certOut, io::toJson(report));
      std::cerr << "verdict " << to_string(report.verdict) << "\n";
      std::cerr << "max cross-term residual " << report.maxCrossTermResidual << "\n";
      if (report.besselB) std::cerr << "A " << report.lowerA << "\nB " << *report.besselB << "\n";
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
      switch (report.verdict) {
        case Verdict::ParsevalCertified:
        case Verdict::FrameCertified: return 0;
        case Verdict::BesselOnly: return kExitBesselOnly;
        case Verdict::Indeterminate: return kExitIndeterminate;
      }
    }

    if (*dump) {
      const auto system = loadSystem(dumpIn);
      const Interval domain = evaluationDomain(system, windowFrom(dumpWindow));
      const FrequencyGrid grid{domain.lower, domain.upper, dumpPoints > 0 ? dumpPoints : defaultGridPoints()};
      std::vector<std::pair<double, Eigen::VectorXcd>> terms;
      for (double a : dumpAlphas) terms.emplace_back(a, crossTermG(system, a, grid));
      io::writeTextFile(dumpOut, io::parsevalDumpCsv(grid, parsevalSum(system, grid), terms));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCode(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIO;
  }
  return 0;
}
