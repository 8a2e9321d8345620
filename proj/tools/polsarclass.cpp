// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
//
// polsarclass: simulate multilook PolSAR covariance scenes, classify segments
// by minimum test statistic against class prototypes, and assess the results.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <polsar/assess.hpp>
#include <polsar/classifier.hpp>
#include <polsar/errors.hpp>
#include <polsar/io.hpp>
#include <polsar/pnm.hpp>
#include <polsar/scenes.hpp>
#include <polsar/segmentation.hpp>
#include <polsar/version.hpp>

namespace fs = std::filesystem;
using namespace polsar;

namespace {

struct SimulateConfig {
  std::uint64_t seed = 0;
  std::string preset_name;
  std::string layout;
  int tile = 150;
  int looks = 4;
  int prototype_pixels = 900;
  bool exact_prototypes = false;
  std::string out_dir;
};

struct ClassifyConfig {
  std::string input;
  std::string prototypes;
  int grid = 0;
  std::string segments;
  std::string stat = "bhattacharyya";
  double beta = kDefaultRenyiBeta;
  double alpha = 0.05;
  bool fuse = false;
  double fuzzy_threshold = 0.0;
  int threads = 0;
  std::string out_dir;
};

struct AssessConfig {
  std::string assignments;
  std::string truth;
  int grid = 0;
  std::string segments;
  std::string prototypes;
  std::string mask;
  double alpha = 0.05;
  std::string out_file;
  std::vector<std::string> compare;
};

Provenance make_provenance(const std::string& canonical_config,
                           std::optional<std::uint64_t> seed) {
  Provenance p;
  p.version = kToolVersion;
  p.config_hash = fnv1a_hex(canonical_config);
  p.seed = seed;
  return p;
}

std::vector<std::vector<std::string>> parse_layout(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream row_stream(text);
  std::string row;
  while (std::getline(row_stream, row, ';')) {
    std::vector<std::string> names;
    std::stringstream name_stream(row);
    std::string name;
    while (std::getline(name_stream, name, ',')) {
      const auto begin = name.find_first_not_of(" \t");
      const auto end = name.find_last_not_of(" \t");
      if (begin == std::string::npos) {
        throw ValidationError("empty class name in layout");
      }
      names.push_back(name.substr(begin, end - begin + 1));
    }
    if (names.empty()) throw ValidationError("empty row in layout");
    rows.push_back(std::move(names));
  }
  if (rows.empty()) throw ValidationError("empty layout");
  return rows;
}

SegmentMap load_segments(int grid, const std::string& segments_file, int width,
                         int height) {
  if (grid > 0) return grid_segment(width, height, grid);
  const LabelRaster labels = read_label_raster(segments_file);
  if (labels.width() != width || labels.height() != height) {
    throw ValidationError("segment map dimensions do not match the raster");
  }
  return SegmentMap::from_labels(labels);
}

std::vector<StatisticKind> requested_kinds(const std::string& stat) {
  if (stat == "all") {
    return {std::begin(kAllKinds), std::end(kAllKinds)};
  }
  const auto kind = parse_statistic(stat);
  if (!kind.has_value()) {
    throw ValidationError("unknown statistic: " + stat);
  }
  return {*kind};
}

void atomic_write_text(const fs::path& path, const std::string& payload) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw FormatError("cannot open " + tmp.string() + " for writing");
    file.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!file) throw FormatError("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

int run_simulate(const SimulateConfig& cfg) {
  MosaicSpec spec;
  if (!cfg.layout.empty()) {
    spec.layout = parse_layout(cfg.layout);
    spec.tile_size = cfg.tile;
    spec.looks = cfg.looks;
    spec.seed = cfg.seed;
  } else {
    if (!cfg.preset_name.empty() && cfg.preset_name != "standard" &&
        cfg.preset_name != "paper") {
      throw ValidationError("unknown scene preset: " + cfg.preset_name);
    }
    spec = MosaicSpec::standard(cfg.seed);
    spec.tile_size = cfg.tile;
    spec.looks = cfg.looks;
  }

  std::ostringstream canon;
  canon << "cmd=simulate\nseed=" << cfg.seed << "\nlayout=" << cfg.layout
        << "\npreset=" << cfg.preset_name << "\ntile=" << spec.tile_size
        << "\nlooks=" << spec.looks << "\nprototype_pixels=" << cfg.prototype_pixels
        << "\nexact_prototypes=" << cfg.exact_prototypes;
  const Provenance prov = make_provenance(canon.str(), cfg.seed);

  fs::create_directories(cfg.out_dir);
  const SimulatedScene scene = simulate_mosaic(spec);
  write_covariance_raster(fs::path(cfg.out_dir) / "mosaic.cov", scene.raster, prov);
  write_label_raster(fs::path(cfg.out_dir) / "truth.labels", scene.truth, prov);
  std::cout << "wrote " << (fs::path(cfg.out_dir) / "mosaic.cov").string() << " ("
            << scene.raster.width() << "x" << scene.raster.height()
            << ", q=" << scene.raster.q() << ", L=" << spec.looks << ")\n";
  std::cout << "wrote " << (fs::path(cfg.out_dir) / "truth.labels").string() << "\n";

  if (cfg.exact_prototypes) {
    // Export the built-in class covariances themselves as the prototype set
    // (no sampling noise, no amplitude-Gaussian block); the given pixel count
    // becomes the nominal n of the test statistics.
    std::vector<PrototypeEntry> entries;
    for (const auto& name : scene.class_names) {
      entries.push_back({name,
                         CovarianceEstimate{preset(name).sigma,
                                            std::max(cfg.prototype_pixels, 1),
                                            static_cast<double>(spec.looks)},
                         {}});
    }
    write_prototypes(fs::path(cfg.out_dir) / "prototypes.json",
                     PrototypeSet(std::move(entries)), prov);
    std::cout << "wrote " << (fs::path(cfg.out_dir) / "prototypes.json").string()
              << " (" << scene.class_names.size() << " exact class presets)\n";
  } else if (cfg.prototype_pixels > 0) {
    const PrototypeSet protos = simulate_prototypes(
        scene.class_names, cfg.prototype_pixels, spec.looks, cfg.seed);
    write_prototypes(fs::path(cfg.out_dir) / "prototypes.json", protos, prov);
    std::cout << "wrote " << (fs::path(cfg.out_dir) / "prototypes.json").string()
              << " (" << protos.size() << " classes, " << cfg.prototype_pixels
              << " pixels each)\n";
  }
  return 0;
}

void write_fused_csv(const fs::path& path,
                     std::span<const FusedAssignment> fused,
                     std::span<const std::string> class_names,
                     const Provenance& prov) {
  std::ostringstream out;
  out << "# " << prov.tool << " " << prov.version << "\n";
  out << "# config: " << prov.config_hash << "\n";
  out << "segment_id,class\n";
  for (const auto& f : fused) {
    out << f.segment_id << ","
        << (f.winner >= 0 ? class_names[static_cast<std::size_t>(f.winner)]
                          : std::string("Unclassified"))
        << "\n";
  }
  atomic_write_text(path, out.str());
}

void write_fuzzy_csv(const fs::path& path,
                     std::span<const SegmentAssignment> assignments,
                     std::span<const std::string> class_names, double threshold,
                     const Provenance& prov) {
  std::ostringstream out;
  out << "# " << prov.tool << " " << prov.version << "\n";
  out << "# config: " << prov.config_hash << "\n";
  out << "segment_id,classes\n";
  for (const auto& a : assignments) {
    out << a.segment_id << ",";
    if (a.classified()) {
      const std::vector<int> members = fuzzy_assign(a.all_stats, threshold);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out << "|";
        out << class_names[static_cast<std::size_t>(members[i])];
      }
    }
    out << "\n";
  }
  atomic_write_text(path, out.str());
}

int run_classify(const ClassifyConfig& cfg) {
  if ((cfg.grid > 0) == !cfg.segments.empty()) {
    throw ValidationError("exactly one of --grid and --segments is required");
  }
  const std::vector<StatisticKind> kinds = requested_kinds(cfg.stat);
  if (cfg.fuse && kinds.size() < 2) {
    throw ValidationError("--fuse needs more than one statistic (use --stat all)");
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw ValidationError("--alpha must lie in (0, 1)");
  }
  if (!(cfg.beta > 0.0 && cfg.beta < 1.0)) {
    throw ValidationError("--beta must lie in (0, 1)");
  }

  const CovarianceRaster raster = read_covariance_raster(cfg.input);
  const PrototypeSet protos = read_prototypes(cfg.prototypes);
  const SegmentMap segmap =
      load_segments(cfg.grid, cfg.segments, raster.width(), raster.height());
  const std::vector<std::string> names = protos.names();

  std::ostringstream canon;
  canon << "cmd=classify\ninput=" << cfg.input << "\nprototypes=" << cfg.prototypes
        << "\ngrid=" << cfg.grid << "\nsegments=" << cfg.segments
        << "\nstat=" << cfg.stat << "\nbeta=" << cfg.beta << "\nalpha=" << cfg.alpha
        << "\nfuse=" << cfg.fuse << "\nfuzzy=" << cfg.fuzzy_threshold;
  const Provenance prov = make_provenance(canon.str(), std::nullopt);

  fs::create_directories(cfg.out_dir);
  const Palette palette = default_palette(protos.size());
  write_palette(fs::path(cfg.out_dir) / "palette.json", palette, names, prov);
  const std::string map_comment =
      prov.tool + " " + prov.version + " config " + prov.config_hash;

  ClassifyOptions options;
  options.beta = cfg.beta;
  options.threads = cfg.threads;

  std::vector<std::vector<SegmentAssignment>> all_assignments;
  for (const StatisticKind kind : kinds) {
    const auto assignments = classify_segments(raster, segmap, protos, kind, options);
    const std::string tag = to_string(kind);
    write_assignments_csv(fs::path(cfg.out_dir) / ("assignments_" + tag + ".csv"),
                          assignments, names, prov);
    write_ppm(fs::path(cfg.out_dir) / ("classmap_" + tag + ".ppm"),
              render_class_map(assignments, segmap, palette), map_comment);
    write_pgm(fs::path(cfg.out_dir) / ("pvalues_" + tag + ".pgm"),
              render_pvalue_map(assignments, segmap, cfg.alpha), map_comment);
    if (cfg.fuzzy_threshold > 0.0) {
      write_fuzzy_csv(fs::path(cfg.out_dir) / ("fuzzy_" + tag + ".csv"), assignments,
                      names, cfg.fuzzy_threshold, prov);
    }
    int classified = 0;
    for (const auto& a : assignments) classified += a.classified() ? 1 : 0;
    std::printf("%s: %d/%zu segments classified, non-rejection at alpha=%g: %.4f\n",
                tag.c_str(), classified, assignments.size(), cfg.alpha,
                non_rejection_rate(assignments, cfg.alpha));
    all_assignments.push_back(assignments);
  }

  if (cfg.fuse) {
    const auto fused = fuse_majority(all_assignments, kinds);
    write_fused_csv(fs::path(cfg.out_dir) / "assignments_fused.csv", fused, names,
                    prov);
    std::vector<SegmentAssignment> as_assignments(fused.size());
    for (std::size_t i = 0; i < fused.size(); ++i) {
      as_assignments[i].segment_id = fused[i].segment_id;
      as_assignments[i].class_index = fused[i].winner;
    }
    write_ppm(fs::path(cfg.out_dir) / "classmap_fused.ppm",
              render_class_map(as_assignments, segmap, palette), map_comment);
    std::cout << "fused: wrote assignments_fused.csv and classmap_fused.ppm\n";
  }
  return 0;
}

int run_assess(const AssessConfig& cfg) {
  if (!cfg.compare.empty()) {
    if (cfg.compare.size() != 2) {
      throw ValidationError("--compare takes exactly two report files");
    }
    const AssessReport a = read_report(cfg.compare[0]);
    const AssessReport b = read_report(cfg.compare[1]);
    const KappaEquality eq = kappa_equality_test(
        KappaReport{a.overall_accuracy, a.kappa_hat, a.kappa_variance},
        KappaReport{b.overall_accuracy, b.kappa_hat, b.kappa_variance});
    std::printf("kappa_1 = %.6f (var %.6g)\n", a.kappa_hat, a.kappa_variance);
    std::printf("kappa_2 = %.6f (var %.6g)\n", b.kappa_hat, b.kappa_variance);
    std::printf("z = %.4f\n", eq.z);
    std::printf("p = %.6g\n", eq.p_value);
    return 0;
  }

  if (cfg.assignments.empty() || cfg.truth.empty() || cfg.prototypes.empty()) {
    throw ValidationError(
        "--assignments, --truth and --prototypes are required (or use --compare)");
  }
  if ((cfg.grid > 0) == !cfg.segments.empty()) {
    throw ValidationError("exactly one of --grid and --segments is required");
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw ValidationError("--alpha must lie in (0, 1)");
  }

  const LabelRaster truth = read_label_raster(cfg.truth);
  const PrototypeSet protos = read_prototypes(cfg.prototypes);
  const SegmentMap segmap =
      load_segments(cfg.grid, cfg.segments, truth.width(), truth.height());

  const std::vector<AssignmentRow> rows = read_assignments_csv(cfg.assignments);
  if (static_cast<int>(rows.size()) != segmap.segment_count()) {
    throw ValidationError("assignment table covers " + std::to_string(rows.size()) +
                          " segments, segment map has " +
                          std::to_string(segmap.segment_count()));
  }

  // Expand per-segment assignments to pixels.
  LabelRaster predicted(truth.width(), truth.height(), -1);
  std::int64_t classified_rows = 0, kept_rows = 0;
  for (const auto& row : rows) {
    int index = -1;
    if (row.classified()) {
      index = protos.index_of(row.class_name);
      if (index < 0) {
        throw ValidationError("class '" + row.class_name +
                              "' not present in the prototype set");
      }
      ++classified_rows;
      if (row.p_value >= cfg.alpha) ++kept_rows;
    }
    if (row.segment_id < 0 || row.segment_id >= segmap.segment_count()) {
      throw ValidationError("segment id out of range: " +
                            std::to_string(row.segment_id));
    }
    for (const int p : segmap.pixels_of(row.segment_id)) predicted.at(p) = index;
  }

  LabelRaster mask_raster;
  if (!cfg.mask.empty()) {
    mask_raster = read_label_raster(cfg.mask);
    if (mask_raster.width() != truth.width() ||
        mask_raster.height() != truth.height()) {
      throw ValidationError("mask dimensions do not match the truth raster");
    }
  }
  const ConfusionMatrix cm = ConfusionMatrix::from_rasters(
      predicted, truth, protos.size(), cfg.mask.empty() ? nullptr : &mask_raster);
  const KappaReport kr = kappa(cm);

  AssessReport report;
  report.overall_accuracy = kr.overall_accuracy;
  report.kappa_hat = kr.kappa_hat;
  report.kappa_variance = kr.variance;
  report.alpha = cfg.alpha;
  report.non_rejection =
      classified_rows > 0
          ? static_cast<double>(kept_rows) / static_cast<double>(classified_rows)
          : 0.0;
  report.unclassified_fraction =
      static_cast<double>(cm.skipped()) /
      static_cast<double>(cm.total() + cm.skipped());
  report.class_names = protos.names();
  report.confusion.assign(
      static_cast<std::size_t>(protos.size()),
      std::vector<std::int64_t>(static_cast<std::size_t>(protos.size())));
  for (int i = 0; i < protos.size(); ++i) {
    for (int j = 0; j < protos.size(); ++j) {
      report.confusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          cm.count(i, j);
    }
  }

  std::printf("overall accuracy      %.4f\n", report.overall_accuracy);
  std::printf("kappa                 %.4f\n", report.kappa_hat);
  std::printf("kappa variance        %.6g\n", report.kappa_variance);
  std::printf("non-rejection (a=%g)  %.4f\n", cfg.alpha, report.non_rejection);
  std::printf("unclassified fraction %.4f\n", report.unclassified_fraction);

  if (!cfg.out_file.empty()) {
    std::ostringstream canon;
    canon << "cmd=assess\nassignments=" << cfg.assignments << "\ntruth=" << cfg.truth
          << "\ngrid=" << cfg.grid << "\nsegments=" << cfg.segments
          << "\nmask=" << cfg.mask << "\nalpha=" << cfg.alpha;
    write_report(cfg.out_file, report, make_provenance(canon.str(), std::nullopt));
    std::cout << "wrote " << cfg.out_file << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region-based PolSAR covariance classification by minimum "
               "stochastic-distance test statistics"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  SimulateConfig sim;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Simulate a multilook covariance scene with ground truth");
  simulate->add_option("--seed", sim.seed, "Master seed (64-bit)");
  simulate->add_option("--preset", sim.preset_name,
                       "Scene preset: 'standard' (alias 'paper'), the nine-class "
                       "3x3 mosaic");
  simulate->add_option("--layout", sim.layout,
                       "Grid of class names, e.g. 'River,Tillage;Corn 1,Corn 2'");
  simulate->add_option("--tile", sim.tile, "Tile size in pixels")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--looks", sim.looks,
                       "Number of looks (integer for simulation)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--prototype-pixels", sim.prototype_pixels,
                       "Training pixels per class prototype (0 = skip)")
      ->check(CLI::NonNegativeNumber);
  simulate->add_flag("--exact-prototypes", sim.exact_prototypes,
                     "Export the built-in class covariances as the prototype set "
                     "instead of sampling training pixels");
  simulate->add_option("--out", sim.out_dir, "Output directory")->required();

  ClassifyConfig cls;
  CLI::App* classify = app.add_subcommand(
      "classify", "Assign each segment the prototype with minimum test statistic");
  classify->add_option("--input", cls.input, "Covariance raster")->required();
  classify->add_option("--prototypes", cls.prototypes, "Prototype JSON")->required();
  classify->add_option("--grid", cls.grid, "Square grid segmentation of size N");
  classify->add_option("--segments", cls.segments, "Segment label raster file");
  classify->add_option(
      "--stat", cls.stat,
      "kl|bhattacharyya|hellinger|renyi|chi2|gauss-bhattacharyya|all");
  classify->add_option("--beta", cls.beta, "Renyi order in (0,1)");
  classify->add_option("--alpha", cls.alpha, "Significance level for p-value maps");
  classify->add_flag("--fuse", cls.fuse, "Majority-vote fusion across statistics");
  classify->add_option("--fuzzy-threshold", cls.fuzzy_threshold,
                       "Also write fuzzy memberships at this p-value threshold");
  classify->add_option("--threads", cls.threads, "Worker threads (0 = auto)");
  classify->add_option("--out", cls.out_dir, "Output directory")->required();

  AssessConfig ass;
  CLI::App* assess = app.add_subcommand(
      "assess", "Accuracy, kappa and rejection-rate report against ground truth");
  assess->add_option("--assignments", ass.assignments, "Assignment CSV");
  assess->add_option("--truth", ass.truth, "Ground-truth label raster");
  assess->add_option("--grid", ass.grid, "Square grid segmentation of size N");
  assess->add_option("--segments", ass.segments, "Segment label raster file");
  assess->add_option("--prototypes", ass.prototypes, "Prototype JSON (class order)");
  assess->add_option("--mask", ass.mask,
                     "Label raster; pixels labeled -1 are excluded from the metrics");
  assess->add_option("--alpha", ass.alpha, "Significance level");
  assess->add_option("--out", ass.out_file, "Machine-readable report (JSON)");
  assess->add_option("--compare", ass.compare,
                     "Two report files: test equality of their kappas")
      ->expected(2);

  try {
    app.parse(argc, argv);
    if (*simulate) return run_simulate(sim);
    if (*classify) return run_classify(cls);
    if (*assess) return run_assess(ass);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
