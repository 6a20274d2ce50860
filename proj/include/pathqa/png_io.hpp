// Copyright 2026 The pathqa Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "pathqa/image.hpp"

namespace pathqa {

enum class PngSpeed { compact, fast };

// Encoders are deterministic: no timestamps or text chunks are written.
std::vector<std::uint8_t> encode_png(const RgbImage& image, PngSpeed speed = PngSpeed::compact);
RgbImage decode_png(std::span<const std::uint8_t> bytes);

/// 8-bit palette PNG whose pixel values are the raw indices (class masks).
std::vector<std::uint8_t> encode_indexed_png(const GrayImage& indices, std::span<const Rgb> palette);
GrayImage decode_indexed_png(std::span<const std::uint8_t> bytes);

struct PngHeader {
  int width = 0;
  int height = 0;
};
/// Reads only the IHDR chunk.
PngHeader read_png_header(const std::filesystem::path& path);

void write_png_file(const std::filesystem::path& path, const RgbImage& image, PngSpeed speed = PngSpeed::compact);
RgbImage read_png_file(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file_text(const std::filesystem::path& path, std::string_view text);

}  // namespace pathqa
