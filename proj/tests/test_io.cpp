// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <polsar/errors.hpp>
#include <polsar/io.hpp>
#include <polsar/pnm.hpp>
#include <polsar/scenes.hpp>

#include "test_util.hpp"

using namespace polsar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("polsar-io-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

Provenance test_provenance() {
  Provenance p;
  p.version = "1.0.0";
  p.config_hash = fnv1a_hex("test");
  p.seed = 42;
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("fnv1a hash") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
  CHECK(fnv1a_hex("same") == fnv1a_hex("same"));
}

TEST_CASE("covariance raster round trip is bit exact") {
  TempDir dir;
  MosaicSpec spec;
  spec.layout = {{"River", "Soybean 2"}};
  spec.tile_size = 6;
  spec.seed = 77;
  const SimulatedScene scene = simulate_mosaic(spec);

  const fs::path file = dir.path / "scene.cov";
  write_covariance_raster(file, scene.raster, test_provenance());
  const CovarianceRaster back = read_covariance_raster(file);

  CHECK(back.width() == scene.raster.width());
  CHECK(back.height() == scene.raster.height());
  CHECK(back.q() == 3);
  CHECK(back.looks() == 4.0);
  REQUIRE(back.data().size() == scene.raster.data().size());
  for (std::size_t i = 0; i < back.data().size(); ++i) {
    CHECK(back.data()[i] == scene.raster.data()[i]);
  }

  // Writing twice produces identical bytes (atomic, deterministic output).
  const fs::path file2 = dir.path / "scene2.cov";
  write_covariance_raster(file2, scene.raster, test_provenance());
  std::ifstream a(file, std::ios::binary), b(file2, std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(a)), {});
  std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
  CHECK(!fs::exists(file.string() + ".tmp"));
}

TEST_CASE("covariance raster reader rejects corrupted files") {
  TempDir dir;
  MosaicSpec spec;
  spec.layout = {{"River"}};
  spec.tile_size = 2;
  spec.seed = 1;
  const SimulatedScene scene = simulate_mosaic(spec);
  const fs::path file = dir.path / "scene.cov";
  write_covariance_raster(file, scene.raster, test_provenance());

  SUBCASE("truncated body") {
    std::string bytes;
    {
      std::ifstream in(file, std::ios::binary);
      bytes.assign((std::istreambuf_iterator<char>(in)), {});
    }
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() - 8));
    out.close();
    CHECK_THROWS_AS(read_covariance_raster(file), FormatError);
  }

  SUBCASE("wrong magic") {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << R"({"magic":"something-else","version":1})" << "\n";
    out.close();
    CHECK_THROWS_AS(read_covariance_raster(file), FormatError);
  }

  SUBCASE("hermitian violation is reported with the pixel index") {
    std::string bytes;
    {
      std::ifstream in(file, std::ios::binary);
      bytes.assign((std::istreambuf_iterator<char>(in)), {});
    }
    // Flip one off-diagonal double in pixel 0 (entry (0,1) real part).
    const std::size_t header = bytes.find('\n') + 1;
    const double bad = 12345.0;
    std::memcpy(bytes.data() + header + 16, &bad, sizeof(bad));
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    CHECK_THROWS_WITH_AS(read_covariance_raster(file),
                         doctest::Contains("pixel 0"), FormatError);
  }
}

TEST_CASE("label raster round trip") {
  TempDir dir;
  LabelRaster labels(5, 3, -1);
  labels.at(0) = 0;
  labels.at(7) = 2;
  labels.at(14) = 1;
  const fs::path file = dir.path / "truth.labels";
  write_label_raster(file, labels, test_provenance());
  const LabelRaster back = read_label_raster(file);
  CHECK(back.width() == 5);
  CHECK(back.height() == 3);
  for (int i = 0; i < 15; ++i) CHECK(back.at(i) == labels.at(i));
}

TEST_CASE("prototype set round trip is bit exact") {
  TempDir dir;
  const std::vector<std::string> names = {"River", "Corn 2"};
  const PrototypeSet protos = simulate_prototypes(names, 64, 4, 5);
  const fs::path file = dir.path / "protos.json";
  write_prototypes(file, protos, test_provenance());
  const PrototypeSet back = read_prototypes(file);

  REQUIRE(back.size() == 2);
  CHECK(back.q() == 3);
  CHECK(back.looks() == 4.0);
  for (int c = 0; c < 2; ++c) {
    CHECK(back.entry(c).name == protos.entry(c).name);
    CHECK(back.entry(c).wishart.sample_size == 64);
    CHECK(testutil::max_abs_diff(back.entry(c).wishart.sigma_hat.to_complex(),
                                 protos.entry(c).wishart.sigma_hat.to_complex()) ==
          0.0);
    REQUIRE(back.entry(c).gaussian.has_value());
    for (int i = 0; i < 3; ++i) {
      CHECK(back.entry(c).gaussian->mean[static_cast<std::size_t>(i)] ==
            protos.entry(c).gaussian->mean[static_cast<std::size_t>(i)]);
      for (int j = 0; j < 3; ++j) {
        CHECK(back.entry(c).gaussian->covariance(i, j) ==
              protos.entry(c).gaussian->covariance(i, j));
      }
    }
  }

  CHECK_THROWS_AS(read_prototypes(dir.path / "missing.json"), FormatError);
}

TEST_CASE("assignment csv round trip") {
  TempDir dir;
  std::vector<SegmentAssignment> assignments(3);
  assignments[0].segment_id = 0;
  assignments[0].class_index = 1;
  assignments[0].winning.kind = StatisticKind::Hellinger;
  assignments[0].winning.statistic = 12.5;
  assignments[0].winning.p_value = 0.1873652091;
  assignments[0].winning.log10_p = -0.727270002;
  assignments[1].segment_id = 1;
  assignments[1].class_index = -1;
  assignments[1].failure = "matrix is singular, to working precision";
  assignments[2].segment_id = 2;
  assignments[2].class_index = 0;
  assignments[2].winning.kind = StatisticKind::Hellinger;
  assignments[2].winning.statistic = 1.0 / 3.0;
  assignments[2].winning.p_value = 0.9999999;
  assignments[2].winning.log10_p = -4.3e-8;

  const std::vector<std::string> names = {"River", "Caatinga"};
  const fs::path file = dir.path / "assignments.csv";
  write_assignments_csv(file, assignments, names, test_provenance());

  const auto rows = read_assignments_csv(file);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].segment_id == 0);
  CHECK(rows[0].class_name == "Caatinga");
  CHECK(rows[0].statistic == 12.5);
  CHECK(rows[0].p_value == 0.1873652091);
  CHECK(rows[0].log10_p == -0.727270002);
  CHECK(rows[0].kind == "hellinger");
  CHECK(rows[0].classified());
  CHECK(!rows[1].classified());
  CHECK(rows[1].class_name == "Unclassified");
  CHECK(rows[1].reason.find("singular") != std::string::npos);
  CHECK(rows[2].statistic == 1.0 / 3.0);  // bit-exact via %.17g
}

TEST_CASE("report round trip") {
  TempDir dir;
  AssessReport report;
  report.overall_accuracy = 0.998765432109876;
  report.kappa_hat = 0.87654321;
  report.kappa_variance = 1.253e-5;
  report.alpha = 0.05;
  report.non_rejection = 0.943;
  report.unclassified_fraction = 0.0;
  report.class_names = {"A", "B"};
  report.confusion = {{10, 1}, {0, 9}};
  const fs::path file = dir.path / "report.json";
  write_report(file, report, test_provenance());
  const AssessReport back = read_report(file);
  CHECK(back.overall_accuracy == report.overall_accuracy);
  CHECK(back.kappa_hat == report.kappa_hat);
  CHECK(back.kappa_variance == report.kappa_variance);
  CHECK(back.non_rejection == report.non_rejection);
  CHECK(back.class_names == report.class_names);
  CHECK(back.confusion == report.confusion);
}

TEST_CASE("pnm round trips") {
  TempDir dir;
  RgbImage rgb(3, 2);
  for (int p = 0; p < 6; ++p) {
    rgb.pixel(p)[0] = static_cast<std::uint8_t>(p * 40);
    rgb.pixel(p)[1] = static_cast<std::uint8_t>(255 - p);
    rgb.pixel(p)[2] = static_cast<std::uint8_t>(p);
  }
  write_ppm(dir.path / "img.ppm", rgb);
  const RgbImage rgb_back = read_ppm(dir.path / "img.ppm");
  CHECK(rgb_back.width() == 3);
  CHECK(rgb_back.height() == 2);
  CHECK(std::equal(rgb.data().begin(), rgb.data().end(), rgb_back.data().begin()));

  GrayImage gray(4, 4, 0);
  gray.at(5) = 255;
  write_pgm(dir.path / "img.pgm", gray);
  const GrayImage gray_back = read_pgm(dir.path / "img.pgm");
  CHECK(std::equal(gray.data().begin(), gray.data().end(), gray_back.data().begin()));

  CHECK_THROWS_AS(read_ppm(dir.path / "img.pgm"), FormatError);

  // Provenance comments survive the reader.
  write_ppm(dir.path / "img_c.ppm", rgb, "tool 1.0.0 config deadbeef");
  const RgbImage rgb_c = read_ppm(dir.path / "img_c.ppm");
  CHECK(std::equal(rgb.data().begin(), rgb.data().end(), rgb_c.data().begin()));
  CHECK_THROWS_AS(write_pgm(dir.path / "bad.pgm", gray, "two\nlines"),
                  ValidationError);
}

TEST_SUITE_END();
