// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string_view>

#include "polsar/raster.hpp"

namespace polsar {

// Binary PNM writers/readers (P6 color maps, P5 p-value maps). Maxval 255.
// An optional single-line comment is embedded after the magic (readers skip
// it); the CLI uses it for the provenance header.

void write_ppm(const std::filesystem::path& path, const RgbImage& image,
               std::string_view comment = {});
RgbImage read_ppm(const std::filesystem::path& path);

void write_pgm(const std::filesystem::path& path, const GrayImage& image,
               std::string_view comment = {});
GrayImage read_pgm(const std::filesystem::path& path);

}  // namespace polsar
