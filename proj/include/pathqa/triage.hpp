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
#include <string>
#include <vector>

#include "pathqa/classes.hpp"
#include "pathqa/ensemble.hpp"
#include "pathqa/image.hpp"

namespace pathqa {

struct TriagePolicy {
  std::array<double, kClassCount> fraction_threshold{};  // tau_c
  std::array<int, kClassCount> min_tiles{};              // n_min

  TriagePolicy() {
    fraction_threshold.fill(0.005);
    min_tiles.fill(5);
  }
  void validate() const;
};

enum class Routing { auto_pass, manual_review };
std::string_view routing_name(Routing r);

// Reprocessing vocabulary, in report order.
inline constexpr std::array<std::string_view, 6> kReprocessSteps = {"rescan", "recut", "restain", "recoverslip",
                                                                    "reembed", "clean_and_rescan"};

struct ClassTally {
  std::int64_t count = 0;
  double fraction = 0.0;
};

struct SlideReport {
  static constexpr int kSchemaVersion = 1;

  std::string slide_id;
  TileMap tile_map;
  std::array<ClassTally, kClassCount> tallies{};
  std::vector<int> flags;  // ascending class index
  Routing routing = Routing::auto_pass;
  std::vector<std::string> suggested_steps;
  std::string ensemble_digest;
  std::string timestamp;

  std::string to_json() const;
  static SlideReport from_json(std::string_view text);
};

/// Flags class c iff count_c >= n_min and fraction_c >= tau_c.
SlideReport aggregate_slide(const TileMap& map, const TriagePolicy& policy, std::string ensemble_digest = {},
                            std::string timestamp = "1970-01-01T00:00:00Z");

/// Step suggested for one flagged class given every flag on the slide;
/// "note" means no physical reprocessing (pen is often intentional ink).
std::string_view suggested_step(int artifact_class, const std::vector<int>& all_flags);

struct RouteDecision {
  Routing routing = Routing::auto_pass;
  std::vector<std::string> summary;  // one line per flagged class
};
RouteDecision route(const SlideReport& report);

/// Heatmap colours: background white, tissue light grey, one fixed colour
/// per artifact class.
inline constexpr std::array<Rgb, kClassCount> kClassColors = {{
    {255, 255, 255},  // background
    {210, 210, 210},  // tissue
    {0, 170, 255},    // air_bubble
    {255, 140, 0},    // chatter
    {150, 0, 255},    // coverslip_scratch
    {140, 90, 40},    // debris
    {0, 200, 0},      // dropped_tissue
    {120, 120, 0},    // dust
    {255, 0, 200},    // focus
    {220, 0, 0},      // fold
    {0, 0, 220},      // pen
    {0, 200, 200},    // tissue_scratch
}};
inline constexpr int kHeatmapCellPixels = 8;
inline constexpr int kLegendSwatch = 16;

/// One kHeatmapCellPixels block per cell followed by a legend strip of
/// kClassCount swatches (class order), each kLegendSwatch pixels square.
RgbImage render_heatmap(const TileMap& map);

}  // namespace pathqa
