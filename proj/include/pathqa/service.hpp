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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pathqa/pyramid.hpp"
#include "pathqa/triage.hpp"

namespace httplib {
class Server;
}

namespace pathqa {

inline constexpr std::array<std::string_view, 6> kDispositions = {"release", "rescan", "recut",
                                                                  "restain", "recoverslip", "reembed"};

struct TileVerdict {
  int level = 0;
  int col = 0;
  int row = 0;
  bool confirmed = false;
  std::optional<int> corrected_class;
};

struct ReviewDecision {
  std::string slide_id;
  std::string reviewer_id;
  std::vector<TileVerdict> verdicts;
  std::string disposition;
  std::string note;
  std::string timestamp;

  static ReviewDecision from_json(std::string_view text);
};

struct SlideListing {
  std::string slide_id;
  Routing routing = Routing::auto_pass;
  std::vector<int> flags;
  bool reviewed = false;
};

/// Screened-slide store: `<reports>/<slide_id>/report.json` and
/// `heatmap.png`, pyramids under `<corpus>/<slide_id>/`, and the
/// append-only decision log `<reports>/decisions.jsonl`.
class ReviewStore {
 public:
  ReviewStore(std::filesystem::path reports_root, std::filesystem::path corpus_root);

  std::vector<SlideListing> list_slides() const;
  std::string get_report(const std::string& slide_id) const;
  std::vector<std::uint8_t> get_heatmap(const std::string& slide_id) const;
  /// PNG of the tile at the report's reference tile size.
  std::vector<std::uint8_t> get_tile(const std::string& slide_id, int level, int col, int row) const;
  /// Validates and appends; returns the decision id.
  std::string post_review(const std::string& slide_id, std::string_view decision_json);
  /// Stored decision documents for a slide, oldest first.
  std::vector<std::string> reviews(const std::string& slide_id) const;

 private:
  std::filesystem::path report_dir(const std::string& slide_id) const;
  SlideReport load_report(const std::string& slide_id) const;
  std::vector<std::string> read_log() const;

  std::filesystem::path reports_root_;
  std::filesystem::path corpus_root_;
  std::filesystem::path log_path_;
  mutable std::mutex log_mu_;
};

/// Registers the /api routes (and static hosting of `ui_dir` at "/" when it
/// exists) on `server`.
void install_routes(httplib::Server& server, ReviewStore& store, const std::filesystem::path& ui_dir = {});

}  // namespace pathqa
