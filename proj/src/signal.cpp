// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/signal.hpp"

#include <cmath>
#include <unsupported/Eigen/FFT>

#include "ewf/error.hpp"

namespace ewf {

void validate(const SampledSignal& signal) {
  if (signal.size() < 2) throw Error(ErrorCode::InvalidSignal, "signal needs at least two samples");
  if (!(signal.sampleInterval > 0.0) || !std::isfinite(signal.sampleInterval)) {
    throw Error(ErrorCode::InvalidSignal, "sample interval must be positive");
  }
  if (!signal.samples.allFinite()) throw Error(ErrorCode::InvalidSignal, "signal has non-finite samples");
}

std::complex<double> inner(const SampledSignal& f, const SampledSignal& g) {
  // Eigen's dot conjugates the first argument.
  return f.sampleInterval * g.samples.dot(f.samples);
}

Eigen::VectorXcd fft(const Eigen::VectorXcd& x) {
  Eigen::FFT<double> engine;
  Eigen::VectorXcd out(x.size());
  engine.fwd(out, x);
  return out;
}

Eigen::VectorXcd ifft(const Eigen::VectorXcd& x) {
  Eigen::FFT<double> engine;
  Eigen::VectorXcd out(x.size());
  engine.inv(out, x);
  return out;
}

double binFrequency(Eigen::Index j, Eigen::Index n, double dt) {
  const double fs = 1.0 / dt;
  return static_cast<double>(signedBin(j, n)) * fs / static_cast<double>(n);
}

Eigen::VectorXd dftFrequencies(Eigen::Index n, double dt) {
  Eigen::VectorXd out(n);
  for (Eigen::Index j = 0; j < n; ++j) out(j) = binFrequency(j, n, dt);
  return out;
}

Eigen::VectorXcd spectrum(const SampledSignal& f) { return f.sampleInterval * fft(f.samples); }

SampledSignal fromSpectrum(const Eigen::VectorXcd& spec, double dt) {
  return {ifft(spec) / dt, dt};
}

}  // namespace ewf
