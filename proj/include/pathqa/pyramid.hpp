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

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pathqa/image.hpp"

namespace pathqa {

inline constexpr std::array<int, 3> kTileSizes = {128, 256, 512};
inline constexpr std::array<int, 4> kBuiltLevels = {0, 2, 4, 6};

constexpr bool is_supported_tile_size(int t) noexcept { return t == 128 || t == 256 || t == 512; }

/// Downsample factor of an even level relative to L0: 2^(level/2).
int level_downsample(int level);
/// Nominal magnification of a level under the given base power (40x -> L2 = 20x).
double level_magnification(double base_magnification, int level);

struct LevelGeometry {
  int level = 0;
  int width = 0;
  int height = 0;
  int downsample = 1;
  friend bool operator==(const LevelGeometry&, const LevelGeometry&) = default;
};

LevelGeometry make_level_geometry(int base_width, int base_height, int level);

struct TileAddress {
  int level = 0;
  int tile_size = 256;
  int col = 0;
  int row = 0;
  int valid_width = 0;
  int valid_height = 0;
  friend bool operator==(const TileAddress&, const TileAddress&) = default;
};

struct TileGrid {
  int level = 0;
  int tile_size = 0;
  int cols = 0;
  int rows = 0;
  std::vector<TileAddress> addresses;  // row-major

  const TileAddress& at(int col, int row) const { return addresses.at(static_cast<std::size_t>(row) * cols + col); }
};

/// Grid over a level of the given geometry. Throws for unsupported sizes.
TileGrid tile_grid(const LevelGeometry& geometry, int tile_size);

/// A fixed-size tile; pixels outside the valid region are white.
struct RasterTile {
  TileAddress address;
  std::vector<std::uint8_t> pixels;  // tile_size * tile_size * 3

  int size() const noexcept { return address.tile_size; }
  const std::uint8_t* px(int x, int y) const noexcept {
    return pixels.data() + (static_cast<std::size_t>(y) * address.tile_size + x) * 3;
  }
  friend bool operator==(const RasterTile&, const RasterTile&) = default;
};

struct PyramidManifest {
  std::string slide_id;
  int base_width = 0;
  int base_height = 0;
  double base_magnification = 40.0;
  Rgb unscanned_fill = kUnscannedGreen;
  std::vector<LevelGeometry> levels;

  std::string to_json() const;
  static PyramidManifest from_json(std::string_view text);
  friend bool operator==(const PyramidManifest&, const PyramidManifest&) = default;
};

/// Pyramid container on disk: `pyramid.json` plus one `L<k>.png` per level.
/// Level rasters are decoded lazily and cached; reads are thread-safe.
class SlidePyramid {
 public:
  /// Validates the manifest and every level raster's stored dimensions.
  static SlidePyramid open(const std::filesystem::path& root);

  const PyramidManifest& manifest() const noexcept { return manifest_; }
  const std::string& slide_id() const noexcept { return manifest_.slide_id; }
  const std::filesystem::path& root() const noexcept { return root_; }
  int base_width() const noexcept { return manifest_.base_width; }
  int base_height() const noexcept { return manifest_.base_height; }
  Rgb unscanned_fill() const noexcept { return manifest_.unscanned_fill; }

  bool has_level(int level) const noexcept;
  const LevelGeometry& level(int level) const;

  TileGrid grid(int level, int tile_size) const { return tile_grid(this->level(level), tile_size); }
  RasterTile read_tile(const TileAddress& address) const;
  /// Full decoded raster of a level (shared, immutable).
  std::shared_ptr<const RgbImage> level_raster(int level) const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::shared_ptr<const RgbImage>> rasters;
  };

  std::filesystem::path root_;
  PyramidManifest manifest_;
  std::shared_ptr<Cache> cache_;
};

inline SlidePyramid open_slide(const std::filesystem::path& root) { return SlidePyramid::open(root); }
inline TileGrid tile_grid(const SlidePyramid& pyramid, int level, int tile_size) {
  return pyramid.grid(level, tile_size);
}
inline RasterTile read_tile(const SlidePyramid& pyramid, const TileAddress& address) {
  return pyramid.read_tile(address);
}

/// 2x2 box filter; an odd trailing row/column is averaged over the pixels
/// that exist. Rounds half up.
RgbImage downsample_by_two(const RgbImage& image);

/// Writes levels {0,2,4,6} plus the manifest into `out_dir` and returns the
/// opened container.
SlidePyramid build_pyramid(const RgbImage& base_image, const std::string& slide_id, double base_magnification,
                           const std::filesystem::path& out_dir, Rgb unscanned_fill = kUnscannedGreen);

}  // namespace pathqa
