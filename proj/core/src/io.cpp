// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/io.hpp"

#include <bit>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polsar/errors.hpp"
#include "polsar/tolerances.hpp"
#include "polsar/version.hpp"

namespace polsar {

namespace {

using nlohmann::json;

void append_le64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_le_double(std::string& out, double v) {
  append_le64(out, std::bit_cast<std::uint64_t>(v));
}

void append_le32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t take_le64(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  }
  return v;
}

double take_le_double(const char* p) { return std::bit_cast<double>(take_le64(p)); }

std::int32_t take_le32(const char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  }
  return static_cast<std::int32_t>(v);
}

/// Writes the full payload to <path>.tmp and renames into place.
void atomic_write(const std::filesystem::path& path, const std::string& payload) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open " + tmp.string() + " for writing");
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw FormatError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

json provenance_json(const Provenance& p) {
  json j{{"tool", p.tool},
         {"version", p.version.empty() ? kToolVersion : p.version},
         {"config_hash", p.config_hash}};
  if (p.seed.has_value()) j["seed"] = *p.seed;
  return j;
}

json parse_header_line(const std::string& payload, std::size_t& body_offset,
                       const std::string& path) {
  const std::size_t nl = payload.find('\n');
  if (nl == std::string::npos) {
    throw FormatError("missing header line in " + path);
  }
  body_offset = nl + 1;
  json j = json::parse(payload.substr(0, nl), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw FormatError("malformed JSON header in " + path);
  }
  return j;
}

void require_magic(const json& j, const char* magic, int version,
                   const std::string& path) {
  if (j.value("magic", "") != magic) {
    throw FormatError("wrong magic in " + path + " (expected " + magic + ")");
  }
  if (j.value("version", -1) != version) {
    throw FormatError("unsupported version in " + path);
  }
}

/// Verifies Hermitian symmetry within tolerance and renormalizes exactly.
void normalize_pixel(std::span<cx> pixel, int q, const std::string& path,
                     int pixel_index) {
  double scale = 0.0;
  for (const cx& v : pixel) scale = std::max(scale, std::abs(v));
  const double tolerance = tol::kHermitianCheck * std::max(scale, 1.0);
  for (int i = 0; i < q; ++i) {
    auto& diag = pixel[static_cast<std::size_t>(i) * q + i];
    if (std::abs(diag.imag()) > tolerance || diag.real() < -tolerance) {
      throw FormatError(path + ": pixel " + std::to_string(pixel_index) +
                        " is not a covariance matrix");
    }
    diag = cx(std::max(diag.real(), 0.0), 0.0);
    for (int j = i + 1; j < q; ++j) {
      auto& upper = pixel[static_cast<std::size_t>(i) * q + j];
      auto& lower = pixel[static_cast<std::size_t>(j) * q + i];
      if (std::abs(upper - std::conj(lower)) > tolerance) {
        throw FormatError(path + ": pixel " + std::to_string(pixel_index) +
                          " violates Hermitian symmetry at offset " +
                          std::to_string((i * q + j) * 16));
      }
      const cx v = 0.5 * (upper + std::conj(lower));
      upper = v;
      lower = std::conj(v);
    }
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json matrix_json(const HermitianMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

HermitianMatrix matrix_from_json(const json& rows, const std::string& path) {
  if (!rows.is_array() || rows.empty()) {
    throw FormatError(path + ": matrix must be a non-empty array");
  }
  const int q = static_cast<int>(rows.size());
  ComplexMatrix full(q);
  for (int i = 0; i < q; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != q) {
      throw FormatError(path + ": matrix row " + std::to_string(i) + " has wrong size");
    }
    for (int j = 0; j < q; ++j) {
      const auto& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_array() || cell.size() != 2) {
        throw FormatError(path + ": matrix entry must be an [re, im] pair");
      }
      full(i, j) = cx(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  try {
    return HermitianMatrix::from_full(full);
  } catch (const ValidationError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

void write_covariance_raster(const std::filesystem::path& path,
                             const CovarianceRaster& raster,
                             const Provenance& provenance) {
  json header{{"magic", "polsar-cov"},
              {"version", 1},
              {"width", raster.width()},
              {"height", raster.height()},
              {"q", raster.q()},
              {"looks", raster.looks()},
              {"provenance", provenance_json(provenance)}};
  std::string payload = header.dump();
  payload.push_back('\n');
  payload.reserve(payload.size() + raster.data().size() * 16);
  for (const cx& v : raster.data()) {
    append_le_double(payload, v.real());
    append_le_double(payload, v.imag());
  }
  atomic_write(path, payload);
}

CovarianceRaster read_covariance_raster(const std::filesystem::path& path) {
  const std::string payload = read_file(path);
  std::size_t offset = 0;
  const json header = parse_header_line(payload, offset, path.string());
  require_magic(header, "polsar-cov", 1, path.string());

  const int width = header.value("width", 0);
  const int height = header.value("height", 0);
  const int q = header.value("q", 0);
  const double looks = header.value("looks", 0.0);
  if (width <= 0 || height <= 0 || q <= 0 || !(looks > 0.0)) {
    throw FormatError("bad covariance raster header in " + path.string());
  }
  CovarianceRaster raster(width, height, q, looks);
  const std::size_t expected = raster.data().size() * 16;
  if (payload.size() - offset != expected) {
    throw FormatError(path.string() + ": body has " +
                      std::to_string(payload.size() - offset) + " bytes, expected " +
                      std::to_string(expected));
  }
  const char* p = payload.data() + offset;
  for (auto& v : raster.data()) {
    v = cx(take_le_double(p), take_le_double(p + 8));
    p += 16;
  }
  for (int i = 0; i < raster.pixel_count(); ++i) {
    normalize_pixel(raster.pixel(i), q, path.string(), i);
  }
  return raster;
}

void write_label_raster(const std::filesystem::path& path, const LabelRaster& labels,
                        const Provenance& provenance) {
  json header{{"magic", "labels"},
              {"version", 1},
              {"width", labels.width()},
              {"height", labels.height()},
              {"provenance", provenance_json(provenance)}};
  std::string payload = header.dump();
  payload.push_back('\n');
  payload.reserve(payload.size() + labels.data().size() * 4);
  for (const std::int32_t v : labels.data()) {
    append_le32(payload, static_cast<std::uint32_t>(v));
  }
  atomic_write(path, payload);
}

LabelRaster read_label_raster(const std::filesystem::path& path) {
  const std::string payload = read_file(path);
  std::size_t offset = 0;
  const json header = parse_header_line(payload, offset, path.string());
  require_magic(header, "labels", 1, path.string());

  const int width = header.value("width", 0);
  const int height = header.value("height", 0);
  if (width <= 0 || height <= 0) {
    throw FormatError("bad label raster header in " + path.string());
  }
  LabelRaster labels(width, height);
  const std::size_t expected = labels.data().size() * 4;
  if (payload.size() - offset != expected) {
    throw FormatError(path.string() + ": body has " +
                      std::to_string(payload.size() - offset) + " bytes, expected " +
                      std::to_string(expected));
  }
  const char* p = payload.data() + offset;
  for (auto& v : labels.data()) {
    v = take_le32(p);
    p += 4;
  }
  return labels;
}

void write_prototypes(const std::filesystem::path& path, const PrototypeSet& protos,
                      const Provenance& provenance) {
  json classes = json::array();
  for (const auto& e : protos.entries()) {
    json c{{"name", e.name},
           {"sample_size", e.wishart.sample_size},
           {"looks", e.wishart.looks},
           {"sigma", matrix_json(e.wishart.sigma_hat)}};
    if (e.gaussian.has_value()) {
      const auto& g = *e.gaussian;
      json cov = json::array();
      for (int i = 0; i < g.covariance.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.covariance.dim(); ++j) row.push_back(g.covariance(i, j));
        cov.push_back(std::move(row));
      }
      c["gaussian"] = json{{"mean", g.mean},
                           {"covariance", std::move(cov)},
                           {"sample_size", g.sample_size}};
    }
    classes.push_back(std::move(c));
  }
  json doc{{"magic", "polsar-prototypes"},
           {"version", 1},
           {"q", protos.q()},
           {"looks", protos.looks()},
           {"provenance", provenance_json(provenance)},
           {"classes", std::move(classes)}};
  atomic_write(path, doc.dump(2) + "\n");
}

PrototypeSet read_prototypes(const std::filesystem::path& path) {
  const json doc = json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw FormatError("malformed JSON in " + path.string());
  }
  require_magic(doc, "polsar-prototypes", 1, path.string());
  if (!doc.contains("classes") || !doc["classes"].is_array() || doc["classes"].empty()) {
    throw FormatError(path.string() + ": no classes");
  }
  std::vector<PrototypeEntry> entries;
  for (const auto& c : doc["classes"]) {
    PrototypeEntry e;
    e.name = c.value("name", "");
    if (e.name.empty()) throw FormatError(path.string() + ": class without a name");
    const int sample_size = c.value("sample_size", 0);
    const double looks = c.value("looks", 0.0);
    if (sample_size < 1 || !(looks > 0.0)) {
      throw FormatError(path.string() + ": class '" + e.name +
                        "' has invalid sample_size or looks");
    }
    if (!c.contains("sigma")) {
      throw FormatError(path.string() + ": class '" + e.name + "' has no sigma");
    }
    e.wishart = CovarianceEstimate{matrix_from_json(c["sigma"], path.string()),
                                   sample_size, looks};
    if (c.contains("gaussian")) {
      const auto& g = c["gaussian"];
      GaussianEstimate ge;
      ge.sample_size = g.value("sample_size", sample_size);
      if (!g.contains("mean") || !g["mean"].is_array()) {
        throw FormatError(path.string() + ": gaussian block without mean");
      }
      ge.mean = g["mean"].get<std::vector<double>>();
      const int q = static_cast<int>(ge.mean.size());
      if (!g.contains("covariance") || static_cast<int>(g["covariance"].size()) != q) {
        throw FormatError(path.string() + ": gaussian covariance size mismatch");
      }
      ge.covariance = RealMatrix(q);
      for (int i = 0; i < q; ++i) {
        const auto& row = g["covariance"][static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != q) {
          throw FormatError(path.string() + ": gaussian covariance row size mismatch");
        }
        for (int j = 0; j < q; ++j) ge.covariance(i, j) = row[static_cast<std::size_t>(j)].get<double>();
      }
      if (!ge.covariance.symmetric(1e-9)) {
        throw FormatError(path.string() + ": gaussian covariance is not symmetric");
      }
      e.gaussian = std::move(ge);
    }
    entries.push_back(std::move(e));
  }
  try {
    return PrototypeSet(std::move(entries));
  } catch (const ValidationError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_assignments_csv(const std::filesystem::path& path,
                           std::span<const SegmentAssignment> assignments,
                           std::span<const std::string> class_names,
                           const Provenance& provenance) {
  std::string out;
  out += "# ";
  out += provenance.tool;
  out += " ";
  out += provenance.version.empty() ? kToolVersion : provenance.version;
  out += "\n# config: " + provenance.config_hash + "\n";
  if (provenance.seed.has_value()) {
    out += "# seed: " + std::to_string(*provenance.seed) + "\n";
  }
  out += "segment_id,class,statistic,p_value,log10_p,kind,reason\n";
  for (const auto& name : class_names) {
    if (name.find_first_of(",\n") != std::string::npos) {
      throw ValidationError("class name not representable in CSV: " + name);
    }
  }
  for (const auto& a : assignments) {
    out += std::to_string(a.segment_id);
    out += ',';
    if (a.classified()) {
      if (a.class_index >= static_cast<int>(class_names.size())) {
        throw ValidationError("class index outside the provided name list");
      }
      out += class_names[static_cast<std::size_t>(a.class_index)];
      out += ',';
      out += format_double(a.winning.statistic);
      out += ',';
      out += format_double(a.winning.p_value);
      out += ',';
      out += format_double(a.winning.log10_p);
      out += ',';
      out += to_string(a.winning.kind);
      out += ",\n";
    } else {
      std::string reason = a.failure;
      for (auto& ch : reason) {
        if (ch == ',' || ch == '\n') ch = ';';
      }
      out += "Unclassified,,,,,";
      out += reason;
      out += '\n';
    }
  }
  atomic_write(path, out);
}

std::vector<AssignmentRow> read_assignments_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<AssignmentRow> rows;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "segment_id,class,statistic,p_value,log10_p,kind,reason") {
        throw FormatError(path.string() + ":" + std::to_string(line_no) +
                          ": unexpected CSV header");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 7) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 7 fields, got " + std::to_string(fields.size()));
    }
    AssignmentRow row;
    try {
      row.segment_id = std::stoi(fields[0]);
      row.class_name = fields[1];
      row.kind = fields[5];
      row.reason = fields[6];
      if (row.reason.empty()) {
        row.statistic = std::stod(fields[2]);
        row.p_value = std::stod(fields[3]);
        row.log10_p = std::stod(fields[4]);
      }
    } catch (const std::exception&) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": malformed numeric field");
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw FormatError(path.string() + ": missing CSV header");
  return rows;
}

void write_palette(const std::filesystem::path& path, const Palette& palette,
                   std::span<const std::string> class_names,
                   const Provenance& provenance) {
  if (palette.class_colors.size() < class_names.size()) {
    throw PaletteMissingClass("palette smaller than the class list");
  }
  json classes = json::array();
  for (std::size_t i = 0; i < class_names.size(); ++i) {
    const auto& c = palette.class_colors[i];
    classes.push_back(json{{"name", class_names[i]}, {"rgb", {c[0], c[1], c[2]}}});
  }
  json doc{{"magic", "polsar-palette"},
           {"version", 1},
           {"provenance", provenance_json(provenance)},
           {"classes", std::move(classes)},
           {"unclassified",
            {palette.unclassified[0], palette.unclassified[1], palette.unclassified[2]}}};
  atomic_write(path, doc.dump(2) + "\n");
}

void write_report(const std::filesystem::path& path, const AssessReport& report,
                  const Provenance& provenance) {
  json doc{{"magic", "polsar-report"},
           {"version", 1},
           {"provenance", provenance_json(provenance)},
           {"overall_accuracy", report.overall_accuracy},
           {"kappa", report.kappa_hat},
           {"kappa_variance", report.kappa_variance},
           {"alpha", report.alpha},
           {"non_rejection", report.non_rejection},
           {"unclassified_fraction", report.unclassified_fraction},
           {"classes", report.class_names},
           {"confusion", report.confusion}};
  atomic_write(path, doc.dump(2) + "\n");
}

AssessReport read_report(const std::filesystem::path& path) {
  const json doc = json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw FormatError("malformed JSON in " + path.string());
  }
  require_magic(doc, "polsar-report", 1, path.string());
  AssessReport r;
  r.overall_accuracy = doc.value("overall_accuracy", 0.0);
  r.kappa_hat = doc.value("kappa", 0.0);
  r.kappa_variance = doc.value("kappa_variance", 0.0);
  r.alpha = doc.value("alpha", 0.05);
  r.non_rejection = doc.value("non_rejection", 0.0);
  r.unclassified_fraction = doc.value("unclassified_fraction", 0.0);
  if (doc.contains("classes")) r.class_names = doc["classes"].get<std::vector<std::string>>();
  if (doc.contains("confusion")) {
    r.confusion = doc["confusion"].get<std::vector<std::vector<std::int64_t>>>();
  }
  return r;
}

}  // namespace polsar
