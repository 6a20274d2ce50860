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
#include <string>
#include <string_view>
#include <vector>

#include "pathqa/classes.hpp"
#include "pathqa/geometry.hpp"
#include "pathqa/image.hpp"
#include "pathqa/pyramid.hpp"

namespace pathqa {

struct Annotation {
  int class_index = 0;
  Polygon points;  // L0 pixel coordinates
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Polygons in insertion order; later polygons overwrite earlier ones.
struct AnnotationSet {
  std::string slide_id;
  std::vector<Annotation> polygons;
  int dropped_coverslip_edge = 0;  // warnings raised while parsing

  std::string to_json() const;
};

AnnotationSet parse_annotations(std::string_view json_text);

/// Class indices over a tile's valid region, one byte per pixel.
struct ClassMask {
  TileAddress address;
  GrayImage raster;  // valid_width x valid_height
};

ClassMask rasterize(const AnnotationSet& annotations, const TileAddress& address, int downsample);
inline ClassMask rasterize(const AnnotationSet& annotations, const TileAddress& address, const SlidePyramid& pyramid) {
  return rasterize(annotations, address, pyramid.level(address.level).downsample);
}

struct LabelPolicy {
  std::array<double, kClassCount> threshold{};  // per-class minimum area fraction
  double tissue_foreground_threshold = 0.10;

  LabelPolicy() { threshold.fill(0.05); }
  void validate() const;
};

/// Fraction of valid pixels that are foreground: luminance < 0.88 and not
/// the unscanned fill colour.
double tissue_foreground(const RasterTile& tile, Rgb unscanned_fill = kUnscannedGreen);

/// Majority-area artifact with per-class threshold; falls back to tissue or
/// background by foreground fraction.
int label_tile(const ClassMask& mask, const RasterTile& tile, const LabelPolicy& policy,
               Rgb unscanned_fill = kUnscannedGreen);

/// Same rule given precomputed artifact area fractions (index by class).
int label_from_fractions(const std::array<double, kClassCount>& fractions, double foreground, const LabelPolicy& policy);

}  // namespace pathqa
