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
#include <string>
#include <vector>

#include "pathqa/annotations.hpp"
#include "pathqa/classes.hpp"
#include "pathqa/geometry.hpp"
#include "pathqa/image.hpp"

namespace pathqa {

/// Deterministic H&E-like texture: white glass with 2-6 smooth tissue
/// regions (eosin pink, hematoxylin speckle) covering 20-60% of the area.
RgbImage generate_tissue(std::uint64_t seed, int width, int height);

/// Where and how large an artifact is drawn. Everything else (orientation,
/// colour, band period, ...) is derived from `seed` by the renderer.
struct ArtifactSpec {
  int artifact_class = kPen;
  std::uint64_t seed = 0;
  Point anchor;        // L0 pixel coordinates, must lie inside the image
  double extent = 0;   // characteristic length in L0 pixels (see renderers)
};

struct RenderedArtifact {
  Polygon polygon;    // ground truth, clipped to the image
  int feather = 0;    // pixels outside the polygon may change within this radius
};

/// Renders one artifact in place. Pixels farther than `feather` from the
/// returned polygon are untouched.
///   pen               polyline stroke, width 6-10% of its length, blue/green ink, 2 px feather; extent = stroke length
///   fold              dark doubled band along a chord; extent = chord length
///   chatter           periodic luminance bands inside a rotated box, tissue only; extent = box side
///   focus             Gaussian-blurred disc; extent = radius
///   air_bubble        bright disc with 4 px dark rim and cornflaking over tissue; extent = radius
///   dust              5-30 dark specks; extent = cluster radius
///   debris            irregular dark blob; extent = diameter (30-120)
///   tissue_scratch    3-8 px white line, tissue only; extent = length
///   coverslip_scratch 2-4 px bright line across the slide with a +/-20% halo
///   dropped_tissue    rectangle of unscanned fill; extent = side
RenderedArtifact apply_artifact(RgbImage& image, const ArtifactSpec& spec, Rgb unscanned_fill = kUnscannedGreen);

struct PlantingRule {
  double probability = 0.0;
  int min_count = 1;
  int max_count = 1;
  double min_extent = 0.0;  // 0 selects the renderer default range
  double max_extent = 0.0;
};

struct CorpusConfig {
  int slide_count = 12;
  int width = 4096;
  int height = 4096;
  double base_magnification = 40.0;
  std::uint64_t seed = 1;
  /// Probability that a slide is kept artifact-free regardless of the rules.
  double clean_probability = 0.0;
  std::array<PlantingRule, kClassCount> rules{};  // indexed by class; negatives ignored

  void validate() const;
  static CorpusConfig from_json(std::string_view text);
};

/// Default extent range [lo, hi] of a class's renderer, in L0 pixels.
std::pair<double, double> default_extent_range(int artifact_class, int width, int height);

struct CorpusSlide {
  std::string slide_id;
  std::vector<int> planted_classes;  // sorted, unique
  std::string annotation_file;       // relative to the corpus root
};

struct CorpusManifest {
  std::uint64_t seed = 0;
  std::vector<CorpusSlide> slides;

  std::string to_json() const;
  static CorpusManifest from_json(std::string_view text);
  static CorpusManifest load(const std::filesystem::path& corpus_root);
};

/// Writes `<root>/<slide_id>/` pyramids, `<root>/<slide_id>.ann.json`
/// annotations and `<root>/corpus.json`. Pure function of the config.
CorpusManifest generate_corpus(const CorpusConfig& config, const std::filesystem::path& root, int workers = 1);

/// One slide of the corpus in memory (image + annotations), as written.
struct SyntheticSlide {
  RgbImage image;
  AnnotationSet annotations;
  std::vector<int> planted_classes;
};
SyntheticSlide synthesize_slide(const CorpusConfig& config, int index);

std::string corpus_slide_id(int index);

}  // namespace pathqa
