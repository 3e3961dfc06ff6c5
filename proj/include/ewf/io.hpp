// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ewf/frame.hpp"
#include "ewf/partition.hpp"
#include "ewf/signal.hpp"
#include "ewf/system.hpp"
#include "ewf/transform.hpp"
#include "ewf/wavelet.hpp"

namespace ewf::io {

using Json = nlohmann::json;

Json readJsonFile(const std::filesystem::path& path);
/// Pretty-printed, newline-terminated. Numbers use the shortest decimal form
/// that parses back to the same double.
void writeJsonFile(const std::filesystem::path& path, const Json& value);
void writeTextFile(const std::filesystem::path& path, const std::string& text);

// Partition: {"variant":"standard|starred","points":[...],"leftInfinite":b,"rightInfinite":b}
Json toJson(const BoundarySet& boundaries);
BoundarySet boundarySetFromJson(const Json& j);

/// Spectrum CSV with columns (frequency, magnitude). An optional header line
/// is skipped; any other malformed row raises ParseError naming the line.
MagnitudeSpectrum readSpectrumCsv(const std::filesystem::path& path);

/// Wavelet config:
///   {"kind":"shannon|meyer|gaussian|custom",
///    "params":{"tau":..,"file":"profile.csv","amplitude":..},
///    "delta":0.01, "overlap":1, "margin":.., "shifts":["1/2", 0.25, ...]}
/// "delta": null disables the essential support. Custom profiles are
/// (xi, Re, Im) CSV files resolved relative to the config file.
struct WaveletConfig {
  std::string kind = "shannon";
  double tau = 0.25;
  std::filesystem::path file;
  double amplitude = 1.0;
  std::optional<double> delta = 0.01;
  double overlap = 1.0;
  std::optional<double> margin;
  std::vector<ShiftStep> shifts;
};

WaveletConfig waveletConfigFromJson(const Json& j, const std::filesystem::path& baseDir = {});
WaveletConfig readWaveletConfig(const std::filesystem::path& path);
MotherWavelet makeWavelet(const WaveletConfig& config);
SystemOptions makeSystemOptions(const WaveletConfig& config);

/// Parses "p/q" exactly, or a decimal number as a plain double.
ShiftStep parseShiftStep(const Json& j);

/// Signal CSV (t, Re, Im) with a uniform t column, or raw little-endian
/// float64 (re, im) pairs next to a JSON sidecar <file>.json holding
/// {"sampleInterval":.., "length":..}. The format follows the extension:
/// ".csv" is text, anything else raw.
SampledSignal readSignal(const std::filesystem::path& path);
void writeSignal(const std::filesystem::path& path, const SampledSignal& signal);

// Coefficients: {"mode":"dewt|cewt","sampleInterval":..,"length":..,
//                "bands":[{"n":..,"bn":..,"stride":..,"coeffs":[[re,im],..]}]}
Json toJson(const CoefficientSet& coeffs);
CoefficientSet coefficientsFromJson(const Json& j);
/// One CSV per band: <prefix>band_<n>.csv with columns (k, b, re, im).
std::vector<std::filesystem::path> writeCoefficientCsv(const std::string& prefix, const CoefficientSet& coeffs);

Json toJson(const EmpiricalWaveletSystem& system);
Json toJson(const FrameReport& report);

/// CSV with columns xi, s_signed, s_abs and a Re/Im pair per alpha.
std::string parsevalDumpCsv(const FrequencyGrid& grid, const ParsevalSum& sum,
                            const std::vector<std::pair<double, Eigen::VectorXcd>>& crossTerms);

}  // namespace ewf::io
