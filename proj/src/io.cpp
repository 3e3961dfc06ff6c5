// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include "ewf/io.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ewf/error.hpp"

namespace ewf::io {

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw Error(ErrorCode::FileError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool parseDouble(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

/// Numeric CSV rows; a non-numeric first line counts as a header.
std::vector<std::vector<double>> readNumericCsv(const fs::path& path, std::size_t columns) {
  std::istringstream in(slurp(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    bool ok = true;
    while (std::getline(cells, cell, ',')) {
      double v = 0.0;
      if (!parseDouble(cell, v)) {
        ok = false;
        break;
      }
      row.push_back(v);
    }
    if (!ok && rows.empty() && lineNo == 1) continue;
    if (!ok || row.size() != columns) {
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(lineNo) + ": expected " +
                                             std::to_string(columns) + " numeric columns, got '" + trim(line) + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": field '" + key + "': " + e.what());
  }
}

template <typename T>
T fieldOr(const Json& j, const char* key, T fallback, const char* what) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  return field<T>(j, key, what);
}

Json number(double x) {
  // JSON has no infinities; encode them as strings.
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

Json readJsonFile(const fs::path& path) {
  const std::string text = slurp(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void writeTextFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::FileError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::FileError, "write failed for " + path.string());
}

void writeJsonFile(const fs::path& path, const Json& value) { writeTextFile(path, value.dump(2) + "\n"); }

Json toJson(const BoundarySet& b) {
  return Json{{"variant", b.variant == BoundaryVariant::Standard ? "standard" : "starred"},
              {"points", b.points},
              {"leftInfinite", b.leftInfinite},
              {"rightInfinite", b.rightInfinite}};
}

BoundarySet boundarySetFromJson(const Json& j) {
  constexpr const char* what = "partition";
  BoundarySet b;
  const auto variant = fieldOr<std::string>(j, "variant", "standard", what);
  if (variant == "standard") {
    b.variant = BoundaryVariant::Standard;
  } else if (variant == "starred") {
    b.variant = BoundaryVariant::Starred;
  } else {
    throw Error(ErrorCode::ParseError, "partition: unknown variant '" + variant + "'");
  }
  b.points = field<std::vector<double>>(j, "points", what);
  b.leftInfinite = fieldOr<bool>(j, "leftInfinite", false, what);
  b.rightInfinite = fieldOr<bool>(j, "rightInfinite", false, what);
  validate(b);
  return b;
}

MagnitudeSpectrum readSpectrumCsv(const fs::path& path) {
  MagnitudeSpectrum s;
  for (const auto& row : readNumericCsv(path, 2)) {
    s.frequency.push_back(row[0]);
    s.magnitude.push_back(row[1]);
  }
  return s;
}

ShiftStep parseShiftStep(const Json& j) {
  if (j.is_number()) return {j.get<double>(), std::nullopt};
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::int64_t p = 0, q = 0;
      const auto ps = trim(s.substr(0, slash));
      const auto qs = trim(s.substr(slash + 1));
      const auto r1 = std::from_chars(ps.data(), ps.data() + ps.size(), p);
      const auto r2 = std::from_chars(qs.data(), qs.data() + qs.size(), q);
      if (r1.ec == std::errc() && r1.ptr == ps.data() + ps.size() && r2.ec == std::errc() &&
          r2.ptr == qs.data() + qs.size() && q != 0) {
        return ShiftStep::fraction(p, q);
      }
    } else {
      double v = 0.0;
      if (parseDouble(s, v)) return {v, std::nullopt};
    }
  }
  throw Error(ErrorCode::ParseError, "shift step must be a number or \"p/q\", got " + j.dump());
}

WaveletConfig waveletConfigFromJson(const Json& j, const fs::path& baseDir) {
  constexpr const char* what = "wavelet";
  WaveletConfig c;
  c.kind = field<std::string>(j, "kind", what);
  if (c.kind != "shannon" && c.kind != "meyer" && c.kind != "gaussian" && c.kind != "custom") {
    throw Error(ErrorCode::ParseError, "wavelet: unknown kind '" + c.kind + "'");
  }
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  c.tau = fieldOr<double>(params, "tau", c.tau, what);
  c.amplitude = fieldOr<double>(params, "amplitude", c.amplitude, what);
  if (params.contains("file")) {
    fs::path file = field<std::string>(params, "file", what);
    c.file = file.is_absolute() || baseDir.empty() ? file : baseDir / file;
  }
  if (c.kind == "custom" && c.file.empty()) throw Error(ErrorCode::ParseError, "wavelet: custom kind needs params.file");
  if (j.contains("delta")) {
    c.delta = j.at("delta").is_null() ? std::nullopt : std::optional<double>(field<double>(j, "delta", what));
  }
  c.overlap = fieldOr<double>(j, "overlap", c.overlap, what);
  if (j.contains("margin") && !j.at("margin").is_null()) c.margin = field<double>(j, "margin", what);
  if (j.contains("shifts")) {
    if (!j.at("shifts").is_array()) throw Error(ErrorCode::ParseError, "wavelet: 'shifts' must be an array");
    for (const auto& s : j.at("shifts")) c.shifts.push_back(parseShiftStep(s));
  }
  return c;
}

WaveletConfig readWaveletConfig(const fs::path& path) {
  return waveletConfigFromJson(readJsonFile(path), path.parent_path());
}

MotherWavelet makeWavelet(const WaveletConfig& c) {
  MotherWavelet w = [&] {
    if (c.kind == "shannon") return shannonWavelet(c.delta);
    if (c.kind == "meyer") return meyerWavelet(c.tau, c.delta);
    if (c.kind == "gaussian") return gaussianWavelet(c.delta);
    std::vector<double> xi;
    std::vector<Complex> values;
    for (const auto& row : readNumericCsv(c.file, 3)) {
      xi.push_back(row[0]);
      values.emplace_back(row[1], row[2]);
    }
    return sampledWavelet(std::move(xi), std::move(values), c.delta);
  }();
  return c.amplitude == 1.0 ? w : w.scaled(c.amplitude);
}

SystemOptions makeSystemOptions(const WaveletConfig& c) {
  SystemOptions o;
  o.overlap = c.overlap;
  o.shiftRule = c.shifts.empty() ? ShiftRule::reciprocal(c.margin) : ShiftRule::explicitSteps(c.shifts);
  return o;
}

SampledSignal readSignal(const fs::path& path) {
  if (path.extension() == ".csv") {
    const auto rows = readNumericCsv(path, 3);
    if (rows.size() < 2) throw Error(ErrorCode::InvalidSignal, path.string() + ": need at least two samples");
    SampledSignal s;
    s.sampleInterval = rows[1][0] - rows[0][0];
    s.samples.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double expected = rows[0][0] + static_cast<double>(i) * s.sampleInterval;
      if (std::abs(rows[i][0] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
        throw Error(ErrorCode::InvalidSignal, path.string() + ": t column is not uniform at row " +
                                                  std::to_string(i + 1));
      }
      s.samples(static_cast<Eigen::Index>(i)) = Complex(rows[i][1], rows[i][2]);
    }
    validate(s);
    return s;
  }
  fs::path sidecar = path;
  sidecar += ".json";
  const Json meta = readJsonFile(sidecar);
  const double dt = field<double>(meta, "sampleInterval", "signal sidecar");
  const auto n = field<std::int64_t>(meta, "length", "signal sidecar");
  const std::string raw = slurp(path, std::ios::in | std::ios::binary);
  if (n < 0 || raw.size() != static_cast<std::size_t>(n) * 16) {
    throw Error(ErrorCode::ParseError, path.string() + ": expected " + std::to_string(n) + " complex float64 values, found " +
                                           std::to_string(raw.size()) + " bytes");
  }
  SampledSignal s{Eigen::VectorXcd(n), dt};
  static_assert(sizeof(double) == 8);
  for (std::int64_t i = 0; i < n; ++i) {
    double re = 0.0, im = 0.0;
    std::memcpy(&re, raw.data() + 16 * i, 8);
    std::memcpy(&im, raw.data() + 16 * i + 8, 8);
    s.samples(i) = Complex(re, im);
  }
  validate(s);
  return s;
}

void writeSignal(const fs::path& path, const SampledSignal& signal) {
  if (path.extension() == ".csv") {
    std::ostringstream out;
    out.precision(17);
    out << "t,re,im\n";
    for (Eigen::Index i = 0; i < signal.size(); ++i) {
      out << static_cast<double>(i) * signal.sampleInterval << ',' << signal.samples(i).real() << ','
          << signal.samples(i).imag() << '\n';
    }
    writeTextFile(path, out.str());
    return;
  }
  std::string raw(static_cast<std::size_t>(signal.size()) * 16, '\0');
  for (Eigen::Index i = 0; i < signal.size(); ++i) {
    const double re = signal.samples(i).real();
    const double im = signal.samples(i).imag();
    std::memcpy(raw.data() + 16 * i, &re, 8);
    std::memcpy(raw.data() + 16 * i + 8, &im, 8);
  }
  writeTextFile(path, raw);
  fs::path sidecar = path;
  sidecar += ".json";
  writeJsonFile(sidecar, Json{{"sampleInterval", signal.sampleInterval}, {"length", signal.size()}});
}

Json toJson(const CoefficientSet& coeffs) {
  Json bands = Json::array();
  for (const auto& b : coeffs.bands) {
    Json values = Json::array();
    for (Eigen::Index k = 0; k < b.values.size(); ++k) values.push_back({b.values(k).real(), b.values(k).imag()});
    bands.push_back({{"n", b.index}, {"bn", b.shiftStep}, {"stride", b.stride}, {"coeffs", std::move(values)}});
  }
  return Json{{"mode", to_string(coeffs.mode)},
              {"sampleInterval", coeffs.sampleInterval},
              {"length", coeffs.signalLength},
              {"bands", std::move(bands)}};
}

CoefficientSet coefficientsFromJson(const Json& j) {
  constexpr const char* what = "coefficients";
  CoefficientSet c;
  const auto mode = fieldOr<std::string>(j, "mode", "dewt", what);
  if (mode != "dewt" && mode != "cewt") throw Error(ErrorCode::ParseError, "coefficients: unknown mode '" + mode + "'");
  c.mode = mode == "dewt" ? CoefficientMode::Discrete : CoefficientMode::ContinuousGrid;
  c.sampleInterval = field<double>(j, "sampleInterval", what);
  c.signalLength = field<Eigen::Index>(j, "length", what);
  if (!j.contains("bands") || !j.at("bands").is_array()) {
    throw Error(ErrorCode::ParseError, "coefficients: missing 'bands' array");
  }
  for (const auto& jb : j.at("bands")) {
    BandCoefficients b;
    b.index = field<int>(jb, "n", what);
    b.shiftStep = field<double>(jb, "bn", what);
    const auto values = field<std::vector<std::vector<double>>>(jb, "coeffs", what);
    b.values.resize(static_cast<Eigen::Index>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k].size() != 2) throw Error(ErrorCode::ParseError, "coefficients: each entry must be [re, im]");
      b.values(static_cast<Eigen::Index>(k)) = Complex(values[k][0], values[k][1]);
    }
    const Eigen::Index fallback = b.values.size() > 0 ? c.signalLength / b.values.size() : 1;
    b.stride = fieldOr<Eigen::Index>(jb, "stride", fallback, what);
    c.bands.push_back(std::move(b));
  }
  return c;
}

std::vector<fs::path> writeCoefficientCsv(const std::string& prefix, const CoefficientSet& coeffs) {
  std::vector<fs::path> written;
  for (const auto& b : coeffs.bands) {
    std::ostringstream out;
    out.precision(17);
    out << "k,b,re,im\n";
    const double step = coeffs.mode == CoefficientMode::Discrete ? b.shiftStep : coeffs.sampleInterval;
    for (Eigen::Index k = 0; k < b.values.size(); ++k) {
      out << k << ',' << static_cast<double>(k) * step << ',' << b.values(k).real() << ',' << b.values(k).imag()
          << '\n';
    }
    fs::path p = prefix + "band_" + std::to_string(b.index) + ".csv";
    writeTextFile(p, out.str());
    written.push_back(std::move(p));
  }
  return written;
}

Json toJson(const EmpiricalWaveletSystem& system) {
  Json atoms = Json::array();
  for (const auto& a : system.atoms()) {
    Json ja{{"n", a.index}, {"ray", a.ray}, {"excluded", a.excluded}, {"center", number(a.center)}};
    if (!a.excluded) {
      ja["scale"] = a.scale;
      ja["shiftStep"] = a.shiftStep();
      if (a.shift.exact) ja["shiftStepExact"] = std::to_string(a.shift.exact->num) + "/" + std::to_string(a.shift.exact->den);
    }
    atoms.push_back(std::move(ja));
  }
  const auto& g = system.gamma();
  const auto& w = system.wavelet();
  Json wavelet{{"name", w.name()}, {"support", to_string(w.support().shape)}, {"l2NormSq", w.l2NormSq()}};
  if (w.essential()) {
    wavelet["essentialSupport"] = {w.essential()->interval.lower, w.essential()->interval.upper};
    wavelet["delta"] = w.essential()->delta;
  }
  return Json{{"partition", toJson(system.partition().boundaries())},
              {"kind", to_string(system.partition().kind())},
              {"gamma",
               {{"label", to_string(g.label)},
                {"lower", g.boundedBelow() ? number(g.lower) : number(-INFINITY)},
                {"upper", g.boundedAbove() ? number(g.upper) : number(INFINITY)}}},
              {"wavelet", std::move(wavelet)},
              {"atoms", std::move(atoms)}};
}

Json toJson(const FrameReport& r) {
  Json residuals = Json::array();
  for (const auto& [alpha, res] : r.crossTermResiduals) residuals.push_back({{"alpha", alpha}, {"residual", res}});
  Json bounds{{"A", number(r.lowerA)},
              {"B", r.besselB ? number(*r.besselB) : Json(nullptr)},
              {"kRange", r.kRange},
              {"tailA", r.lowerTail},
              {"tailB", r.besselTail},
              {"refinementDeltaA", r.besselB ? number(r.lowerRefinementDelta) : Json(nullptr)},
              {"refinementDeltaB", r.besselB ? number(r.besselRefinementDelta) : Json(nullptr)}};
  return Json{{"verdict", to_string(r.verdict)},
              {"domain", {r.domain.lower, r.domain.upper}},
              {"gridPoints", r.gridPoints},
              {"refinedGridPoints", 2 * r.gridPoints},
              {"bands", r.bands},
              {"parsevalSum", {{"signedDeviation", r.parsevalSumDeviation},
                               {"absoluteDeviation", r.parsevalSumAbsoluteDeviation}}},
              {"alphaLattice", {{"halfWidth", r.alphaHalfWidth},
                                {"exact", r.exactLattice},
                                {"maxResidual", r.maxCrossTermResidual},
                                {"residuals", std::move(residuals)}}},
              {"bounds", std::move(bounds)},
              {"probes", {{"licValues", r.licValues}, {"energyRatios", r.energyRatios}}},
              {"warnings", r.warnings}};
}

std::string parsevalDumpCsv(const FrequencyGrid& grid, const ParsevalSum& sum,
                            const std::vector<std::pair<double, Eigen::VectorXcd>>& crossTerms) {
  std::ostringstream out;
  out.precision(17);
  out << "xi,s_signed,s_abs";
  for (const auto& [alpha, g] : crossTerms) out << ",G_re[" << alpha << "],G_im[" << alpha << "]";
  out << '\n';
  for (Eigen::Index j = 0; j < grid.points; ++j) {
    out << grid.at(j) << ',' << sum.signedSum(j) << ',' << sum.absoluteSum(j);
    for (const auto& [alpha, g] : crossTerms) out << ',' << g(j).real() << ',' << g(j).imag();
    out << '\n';
  }
  return out.str();
}

}  // namespace ewf::io
