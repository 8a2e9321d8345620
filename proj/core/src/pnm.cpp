// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/pnm.hpp"

#include <fstream>
#include <string>

#include "polsar/errors.hpp"

namespace polsar {

namespace {

void write_pnm(const std::filesystem::path& path, const char* magic, int width,
               int height, std::string_view comment,
               std::span<const std::uint8_t> bytes) {
  if (comment.find('\n') != std::string_view::npos) {
    throw ValidationError("PNM comment must be a single line");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out << magic << "\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  out << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("short write to " + path.string());
}

struct PnmHeader {
  int width = 0;
  int height = 0;
};

// Reads the three header tokens after the magic, skipping '#' comments.
PnmHeader read_pnm_header(std::istream& in, const std::string& path) {
  int values[3];
  for (int& v : values) {
    for (;;) {
      in >> std::ws;
      if (in.peek() == '#') {
        std::string comment;
        std::getline(in, comment);
        continue;
      }
      break;
    }
    if (!(in >> v)) throw FormatError("truncated PNM header in " + path);
  }
  if (values[2] != 255) throw FormatError("unsupported PNM maxval in " + path);
  if (values[0] <= 0 || values[1] <= 0) throw FormatError("bad PNM size in " + path);
  in.get();  // single whitespace byte before the raster
  return {values[0], values[1]};
}

}  // namespace

void write_ppm(const std::filesystem::path& path, const RgbImage& image,
               std::string_view comment) {
  write_pnm(path, "P6", image.width(), image.height(), comment, image.data());
}

RgbImage read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::string magic;
  in >> magic;
  if (magic != "P6") throw FormatError("not a binary PPM: " + path.string());
  const PnmHeader h = read_pnm_header(in, path.string());
  RgbImage img(h.width, h.height);
  auto bytes = img.data();
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
    throw FormatError("truncated PPM raster in " + path.string());
  }
  return img;
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image,
               std::string_view comment) {
  write_pnm(path, "P5", image.width(), image.height(), comment, image.data());
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::string magic;
  in >> magic;
  if (magic != "P5") throw FormatError("not a binary PGM: " + path.string());
  const PnmHeader h = read_pnm_header(in, path.string());
  GrayImage img(h.width, h.height);
  auto bytes = img.data();
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
    throw FormatError("truncated PGM raster in " + path.string());
  }
  return img;
}

}  // namespace polsar
