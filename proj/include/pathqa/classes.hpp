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
#include <optional>
#include <string>
#include <string_view>

namespace pathqa {

// Dense, stable class indices. 0 and 1 form the negative set; 2..11 are the
// ten artifact classes.
enum ClassIndex : int {
  kBackground = 0,
  kTissue = 1,
  kAirBubble = 2,
  kChatter = 3,
  kCoverslipScratch = 4,
  kDebris = 5,
  kDroppedTissue = 6,
  kDust = 7,
  kFocus = 8,
  kFold = 9,
  kPen = 10,
  kTissueScratch = 11,
};

inline constexpr int kClassCount = 12;
inline constexpr int kFirstArtifact = 2;

/// Annotation-file index of the coverslip-edge class: recognised by the
/// parser but dropped, it is not part of the class table.
inline constexpr int kCoverslipEdgeIndex = 12;

inline constexpr std::array<std::string_view, kClassCount> kClassNames = {
    "background", "tissue", "air_bubble", "chatter", "coverslip_scratch", "debris",
    "dropped_tissue", "dust", "focus", "fold", "pen", "tissue_scratch"};

constexpr bool is_valid_class(int c) noexcept { return c >= 0 && c < kClassCount; }
constexpr bool is_artifact(int c) noexcept { return c >= kFirstArtifact && c < kClassCount; }
constexpr bool is_negative(int c) noexcept { return c == kBackground || c == kTissue; }

std::string_view class_name(int c);
/// Accepts a class name ("pen") or "coverslip_edge"; nullopt when unknown.
std::optional<int> class_from_name(std::string_view name);
/// Parses a class given either as a name or a decimal index; throws on failure.
int parse_class(std::string_view text);

}  // namespace pathqa
