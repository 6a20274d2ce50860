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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pathqa/annotations.hpp"
#include "pathqa/dataset.hpp"
#include "pathqa/ensemble.hpp"
#include "pathqa/softmax.hpp"
#include "pathqa/synth.hpp"
#include "pathqa/triage.hpp"

namespace pathqa {

/// Everything a run needs, loaded from one JSON file.
struct RunConfig {
  std::filesystem::path run_dir = "run";
  std::uint64_t seed = 7;
  int workers = 1;
  std::string timestamp = "1970-01-01T00:00:00Z";

  CorpusConfig corpus;
  int level = 2;
  int tile_size = 256;
  LabelPolicy label_policy;
  BalancePolicy balance;
  std::size_t shard_max_records = 256;

  TrainingHyper hyper;
  std::vector<int> screener_classes = {kPen, kFold, kFocus};
  std::vector<int> multiclass_classes = {kChatter, kFold, kPen};
  std::map<int, double> decision_thresholds;

  TriagePolicy triage;

  std::vector<int> ablation_levels = {2, 4};
  std::vector<int> ablation_tile_sizes = {128, 256, 512};

  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path ui_dir;

  nlohmann::json raw;  // the document as loaded, for digests

  static RunConfig from_json(const nlohmann::json& doc);
  static RunConfig load(const std::filesystem::path& path);
  void validate() const;
  std::string digest() const;

  std::filesystem::path corpus_dir() const { return run_dir / "corpus"; }
  std::filesystem::path tiles_dir() const { return run_dir / "tiles"; }
  std::filesystem::path shards_dir() const { return run_dir / "shards"; }
  std::filesystem::path models_dir() const { return run_dir / "models"; }
  std::filesystem::path screen_dir() const { return run_dir / "screen"; }
  std::filesystem::path reports_dir() const { return run_dir / "reports"; }
};

/// Output record of one stage; merged into `<run_dir>/manifest.json`.
struct StageResult {
  std::string stage;
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> outputs;
  std::vector<std::string> messages;
};

// One function per CLI subcommand.
StageResult run_synth(const RunConfig& config);
StageResult run_tile(const RunConfig& config);
StageResult run_split(const RunConfig& config);
StageResult run_balance(const RunConfig& config);
StageResult run_pack(const RunConfig& config);
StageResult run_train(const RunConfig& config);
StageResult run_screen(const RunConfig& config);
StageResult run_evaluate(const RunConfig& config);
StageResult run_ablate(const RunConfig& config);
StageResult run_report(const RunConfig& config);

/// Scores a truth/prediction pair of JSON label arrays (names or indices).
StageResult run_evaluate_labels(const RunConfig& config, const std::filesystem::path& truths,
                                const std::filesystem::path& predictions);

/// Records a stage in the run manifest with config and file digests.
void write_manifest(const RunConfig& config, const StageResult& result);

/// Stage digests recorded so far: stage -> (relative path -> sha256).
std::map<std::string, std::map<std::string, std::string>> manifest_output_digests(const std::filesystem::path& run_dir);

// Per-screener test-split scores written by run_evaluate.
struct ScreenerScore {
  int artifact_class = 0;
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  double recall = 0;
  double specificity = 0;
};

}  // namespace pathqa
