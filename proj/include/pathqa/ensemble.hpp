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
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pathqa/annotations.hpp"
#include "pathqa/classifier.hpp"
#include "pathqa/pyramid.hpp"

namespace pathqa {

struct EnsembleMember {
  std::string name;
  std::vector<int> class_subset;  // artifact classes this member may report
  int level = 2;
  int tile_size = 256;
  std::filesystem::path model_path;  // native model, or
  std::string endpoint;              // remote endpoint ("http://host:port")
  std::string remote_model;
  std::map<int, double> thresholds;  // per class; missing -> 0.5

  double threshold(int c) const;
};

struct EnsembleConfig {
  std::vector<EnsembleMember> members;
  int reference_level = 2;
  int reference_tile_size = 256;

  void validate() const;
  std::string to_json() const;
  /// Relative model paths are resolved against `base_dir`.
  static EnsembleConfig from_json(std::string_view text, const std::filesystem::path& base_dir = {});
  /// SHA-256 of the JSON form with model paths reduced to file names, plus
  /// each model file's SHA-256.
  std::string digest() const;
};

/// A member bound to a loaded classifier.
struct LoadedMember {
  EnsembleMember spec;
  std::shared_ptr<const TileClassifier> classifier;
};

std::vector<LoadedMember> load_members(const EnsembleConfig& config);

struct TileMapCell {
  int label = 0;  // artifact class, or 0/1 when nothing was detected
  double probability = 0.0;
  friend bool operator==(const TileMapCell&, const TileMapCell&) = default;
};

/// Merged per-cell predictions on the reference grid, row-major.
struct TileMap {
  std::string slide_id;
  int level = 2;
  int tile_size = 256;
  int cols = 0;
  int rows = 0;
  std::vector<TileMapCell> cells;

  const TileMapCell& at(int col, int row) const { return cells.at(static_cast<std::size_t>(row) * cols + col); }
  std::string to_json() const;
  static TileMap from_json(std::string_view text);
  friend bool operator==(const TileMap&, const TileMap&) = default;
};

/// A thresholded member detection in L0 coordinates.
struct Detection {
  Rect region;
  int class_index = 0;
  double probability = 0.0;
};

/// Projects detections onto the reference grid: a cell takes (c, p) when
/// the detection covers at least 25% of it; among candidates the largest p
/// wins, ties to the lower class index. Undetected cells keep `negatives`.
TileMap merge_detections(const TileGrid& reference, int reference_downsample, int base_width, int base_height,
                         std::span<const Detection> detections, std::vector<TileMapCell> negatives);

/// Detections of one member on its own grid.
std::vector<Detection> member_detections(const SlidePyramid& pyramid, const LoadedMember& member, int workers = 1);

/// Runs every member and merges onto the reference grid. Negative cells are
/// labeled tissue/background by the foreground fraction of the reference tile.
TileMap run_ensemble(const SlidePyramid& pyramid, std::span<const LoadedMember> members, const EnsembleConfig& config,
                     const LabelPolicy& policy, int workers = 1);
TileMap run_ensemble(const SlidePyramid& pyramid, const EnsembleConfig& config, const LabelPolicy& policy,
                     int workers = 1);

}  // namespace pathqa
