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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathqa/annotations.hpp"
#include "pathqa/pyramid.hpp"

namespace pathqa {

enum class Split { train, val, test };
std::string_view split_name(Split s);
Split split_from_name(std::string_view name);

struct SplitAssignment {
  std::uint64_t seed = 0;
  std::map<std::string, Split> assignment;

  std::vector<std::string> slides_in(Split s) const;
  std::string to_json() const;
  static SplitAssignment from_json(std::string_view text);
};

/// Seeded shuffle of the (sorted) ids; train = round(0.6 n), val =
/// round(0.2 n), test = the rest. Requires at least 5 slides.
SplitAssignment split_slides(std::vector<std::string> slide_ids, std::uint64_t seed);

struct LabeledTile {
  std::string slide_id;
  RasterTile image;
  ClassMask mask;
  int label = 0;
  std::int64_t duplicated_from = -1;  // ordinal of the source tile, -1 for originals

  const TileAddress& address() const noexcept { return image.address; }
  friend bool operator==(const LabeledTile& a, const LabeledTile& b) {
    return a.slide_id == b.slide_id && a.image == b.image && a.mask.address == b.mask.address &&
           a.mask.raster == b.mask.raster && a.label == b.label && a.duplicated_from == b.duplicated_from;
  }
};

/// One labeled tile per grid address, row-major.
std::vector<LabeledTile> extract_labeled_tiles(const SlidePyramid& pyramid, const AnnotationSet& annotations,
                                               int level, int tile_size, const LabelPolicy& policy,
                                               int workers = 1);

struct BalancePolicy {
  double factor = 2.0;
  void validate() const;
};

/// Per artifact class c: mu_c = mean original count per slide over slides
/// holding c. Slides with fewer than mu_c / f originals get copies of their
/// own class-c originals (ordinal order, cycled) appended until their count
/// reaches floor(mu_c). Originals keep their position; copies are appended.
/// Existing copies (duplicated_from >= 0) count toward the target, which
/// makes the pass idempotent.
std::vector<LabeledTile> balance_training_set(std::vector<LabeledTile> tiles, const BalancePolicy& policy);

/// Counts per (slide, artifact class) of original tiles; exposed for tests.
std::map<std::pair<std::string, int>, std::int64_t> class_counts_by_slide(const std::vector<LabeledTile>& tiles,
                                                                           bool include_copies);

// --- shards -------------------------------------------------------------

std::vector<std::uint8_t> encode_shard(std::span<const LabeledTile> tiles);
std::vector<LabeledTile> decode_shard(std::span<const std::uint8_t> bytes);

/// Writes `<dir>/<prefix>-NNNNN.pqshard` files of at most `max_records`
/// records each; returns the paths in order.
std::vector<std::filesystem::path> pack_shards(std::span<const LabeledTile> tiles, const std::filesystem::path& dir,
                                               const std::string& prefix, std::size_t max_records);
std::vector<LabeledTile> read_shards(std::span<const std::filesystem::path> paths);

// --- tallies ------------------------------------------------------------

/// counts[class][level][tile_size]
struct TallyTable {
  std::map<int, std::map<int, std::map<int, std::int64_t>>> counts;
  std::int64_t total = 0;

  std::int64_t count(int cls, int level, int tile_size) const;
  std::int64_t total_at(int level, int tile_size) const;
  void merge(const TallyTable& other);

  /// Rows per class, one column per (level, tile size) labeled with its
  /// magnification under `base_magnification`.
  std::string to_text(double base_magnification = 40.0) const;
  std::string to_csv() const;
};

TallyTable tally(std::span<const LabeledTile> tiles);

}  // namespace pathqa
