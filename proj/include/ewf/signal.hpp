// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <Eigen/Core>
#include <complex>

namespace ewf {

/// Uniformly sampled complex signal on a periodic grid t_m = m * sampleInterval.
struct SampledSignal {
  Eigen::VectorXcd samples;
  double sampleInterval = 1.0;

  Eigen::Index size() const { return samples.size(); }
  /// Plancherel-consistent energy: sampleInterval * sum |x|^2.
  double energy() const { return sampleInterval * samples.squaredNorm(); }
};

/// Throws InvalidSignal unless the signal has >= 2 finite samples and a
/// positive sample interval.
void validate(const SampledSignal& signal);

/// sampleInterval-weighted inner product <f, g> = dt * sum f conj(g).
std::complex<double> inner(const SampledSignal& f, const SampledSignal& g);

/// Unnormalised forward DFT.
Eigen::VectorXcd fft(const Eigen::VectorXcd& x);
/// Inverse DFT including the 1/N factor.
Eigen::VectorXcd ifft(const Eigen::VectorXcd& x);

/// Signed DFT bin of position j: j for j < (N+1)/2, j - N otherwise.
inline Eigen::Index signedBin(Eigen::Index j, Eigen::Index n) { return j < (n + 1) / 2 ? j : j - n; }

/// Frequency of DFT position j for an n-point grid with spacing dt, computed
/// as (k * fs) / n so that rational boundaries land exactly on bins.
double binFrequency(Eigen::Index j, Eigen::Index n, double dt);

/// Frequencies of all DFT positions, in FFT order.
Eigen::VectorXd dftFrequencies(Eigen::Index n, double dt);

/// Continuous-transform approximation f_hat(xi_j) = dt * DFT(f)_j, FFT order.
Eigen::VectorXcd spectrum(const SampledSignal& f);

/// Inverse of `spectrum`.
SampledSignal fromSpectrum(const Eigen::VectorXcd& spec, double dt);

}  // namespace ewf
