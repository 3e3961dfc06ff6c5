// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ewf Authors

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ewf/error.hpp"
#include "ewf/io.hpp"
#include "fixtures.hpp"

using namespace ewf;
using namespace ewf::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ewf_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("partition JSON round trip") {
  const BoundarySet b{{-3.0, -1.0, 1.0, 4.0}, BoundaryVariant::Starred, false, true};
  CHECK(io::boundarySetFromJson(io::toJson(b)) == b);
  const auto j = io::Json::parse(R"({"points":[-1,0,2],"leftInfinite":true})");
  const auto parsed = io::boundarySetFromJson(j);
  CHECK(parsed.variant == BoundaryVariant::Standard);
  CHECK(parsed.leftInfinite);
  CHECK_FALSE(parsed.rightInfinite);
  CHECK_THROWS_AS(io::boundarySetFromJson(io::Json::parse(R"({"points":[2,1,0]})")), Error);
  CHECK_THROWS_AS(io::boundarySetFromJson(io::Json::parse(R"({"variant":"odd","points":[0,1]})")), Error);
}

TEST_CASE("spectrum CSV") {
  const auto ok = scratch("spec.csv");
  write(ok, "frequency,magnitude\n0,1\n0.5,2\n1,0.5\n");
  const auto s = io::readSpectrumCsv(ok);
  CHECK(s.frequency.size() == 3);
  CHECK(s.magnitude[1] == 2.0);

  const auto bad = scratch("bad.csv");
  write(bad, "0,1\n0.5,2\n1,abc\n");
  try {
    io::readSpectrumCsv(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  CHECK_THROWS_AS(io::readSpectrumCsv(scratch("missing.csv")), Error);
}

TEST_CASE("wavelet configs") {
  const auto c = io::waveletConfigFromJson(
      io::Json::parse(R"({"kind":"meyer","params":{"tau":0.2},"overlap":1.4,"shifts":["1/2", 0.25]})"));
  CHECK(c.tau == 0.2);
  CHECK(c.overlap == 1.4);
  REQUIRE(c.shifts.size() == 2);
  CHECK(c.shifts[0].exact->den == 2);
  CHECK_FALSE(c.shifts[1].exact.has_value());
  CHECK(io::makeWavelet(c).support().upper == doctest::Approx(0.7));

  const auto g = io::waveletConfigFromJson(io::Json::parse(R"({"kind":"gaussian","delta":0.05})"));
  CHECK(io::makeWavelet(g).essential()->delta == 0.05);

  const auto profile = scratch("profile.csv");
  write(profile, "xi,re,im\n-1,0,0\n0,1,0\n1,0,0\n");
  const auto custom = io::waveletConfigFromJson(
      io::Json::parse(R"({"kind":"custom","params":{"file":"profile.csv","amplitude":2}})"), profile.parent_path());
  const auto w = io::makeWavelet(custom);
  CHECK(w(0.0) == Complex(2.0));
  CHECK(w.support().isCompact());

  CHECK_THROWS_AS(io::waveletConfigFromJson(io::Json::parse(R"({"kind":"haar"})")), Error);
  CHECK_THROWS_AS(io::parseShiftStep(io::Json("1/0")), Error);
  CHECK_THROWS_AS(io::parseShiftStep(io::Json(true)), Error);
}

TEST_CASE("signals round trip in both formats") {
  const auto sys = shannonUnitSystem();
  const auto f = probes(sys, {-8, 8}, 1, 5, 256).front();
  for (const char* name : {"sig.csv", "sig.bin"}) {
    const auto p = scratch(name);
    io::writeSignal(p, f);
    const auto g = io::readSignal(p);
    CHECK(g.size() == f.size());
    CHECK(g.sampleInterval == doctest::Approx(f.sampleInterval).epsilon(1e-12));
    CHECK(g.samples == f.samples);
  }
  const auto empty = scratch("empty.csv");
  write(empty, "t,re,im\n");
  try {
    io::readSignal(empty);
    FAIL("expected InvalidSignal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
  }
  const auto uneven = scratch("uneven.csv");
  write(uneven, "0,1,0\n1,1,0\n3,1,0\n");
  CHECK_THROWS_AS(io::readSignal(uneven), Error);
  const auto truncated = scratch("trunc.bin");
  write(truncated, "12345678");
  write(scratch("trunc.bin.json"), R"({"sampleInterval":1,"length":4})");
  CHECK_THROWS_AS(io::readSignal(truncated), Error);
}

TEST_CASE("coefficient envelope round trip") {
  const auto sys = shannonUnitSystem();
  const auto f = probes(sys, {-8, 8}, 1, 6, 256).front();
  const auto c = dewtForward(f, sys);
  const auto p = scratch("coeffs.json");
  io::writeJsonFile(p, io::toJson(c));
  const auto back = io::coefficientsFromJson(io::readJsonFile(p));
  REQUIRE(back.bands.size() == c.bands.size());
  for (std::size_t b = 0; b < c.bands.size(); ++b) CHECK(back.bands[b].values == c.bands[b].values);
  CHECK(relativeError(synthesize(back, sys), f) < 1e-8);
  const auto files = io::writeCoefficientCsv(scratch("c_").string(), c);
  CHECK(files.size() == 16);
}

TEST_CASE("reports are deterministic") {
  const auto sys = gaussianRaySystem();
  CertifyOptions opts;
  opts.window = Interval{-10, 10};
  opts.gridPoints = 1 << 11;
  const auto a = io::toJson(certify(sys, probes(sys, {-10, 10}, 2, 77), opts)).dump(2);
  const auto b = io::toJson(certify(sys, probes(sys, {-10, 10}, 2, 77), opts)).dump(2);
  CHECK(a == b);
  const auto j = io::Json::parse(a);
  CHECK(j["verdict"] == "FrameCertified");
  CHECK(j["bounds"]["A"].get<double>() > 0.0);
  CHECK(j["probes"]["energyRatios"].size() == 2);
  CHECK(io::toJson(sys)["atoms"].size() == 4);
}
