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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pathqa/classes.hpp"
#include "pathqa/classifier.hpp"
#include "pathqa/dataset.hpp"
#include "pathqa/softmax.hpp"

namespace pathqa {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// counts(i, j): tiles of true classes[i] predicted as classes[j].
struct ConfusionMatrix {
  std::vector<int> classes;
  CountMatrix counts;

  std::int64_t total() const { return counts.sum(); }
  int position_of(int class_index) const;
  std::int64_t at(int true_class, int predicted_class) const;
  std::string to_text() const;
};

ConfusionMatrix confusion(std::span<const int> truths, std::span<const int> predictions, std::vector<int> classes);

struct PerClassMetrics {
  int class_index = 0;
  double precision = 0, recall = 0, specificity = 0, f1 = 0;
  std::int64_t support = 0;
};

struct ClassMetrics {
  std::vector<PerClassMetrics> per_class;  // same order as the matrix classes
  double accuracy = 0;
  double macro_precision = 0, macro_recall = 0, macro_f1 = 0, macro_specificity = 0;

  const PerClassMetrics* find(int class_index) const;
};

/// Ratios with a zero denominator are 0; macro means cover classes with
/// support > 0.
ClassMetrics per_class_metrics(const ConfusionMatrix& cm);

struct CollapsedRow {
  int true_class = 0;
  std::int64_t count = 0;
  double artifact_fraction = 0;
  double background_fraction = 0;
};

/// Artifact (2..11) vs background ({0,1}) scoring: any artifact prediction
/// on an artifact tile counts as a true positive.
struct CollapsedReport {
  std::vector<CollapsedRow> rows;  // ascending true class, present classes only
  // [truth][pred], 0 = background, 1 = artifact
  std::array<std::array<std::int64_t, 2>, 2> matrix{};

  const CollapsedRow* find(int true_class) const;
};

CollapsedReport collapse_artifact_vs_background(std::span<const int> truths, std::span<const int> predictions);

// --- ablation -------------------------------------------------------------

/// Labeled features of every slide at one grid point.
struct GridPointData {
  std::map<std::string, TrainingSet> by_slide;
};

/// Supplies extracted data for (level, tile_size); called once per point.
using GridDataProvider = std::function<GridPointData(int level, int tile_size)>;

/// A pluggable classifier: trains on a training set and returns something
/// that predicts class indices from feature rows.
struct ClassifierSpec {
  std::string name;
  std::function<std::function<int(const FeatureVector&)>(const TrainingSet&)> train;
};

/// Baseline multiclass softmax over every class present in training
/// (background and tissue merged into 0).
ClassifierSpec softmax_classifier_spec(std::string name, TrainingHyper hyper);

struct AblationGrid {
  std::vector<int> levels;
  std::vector<int> tile_sizes;
  std::vector<ClassifierSpec> classifiers;
};

struct AblationRow {
  std::string classifier;
  int level = 0;
  int tile_size = 0;
  bool skipped = false;
  std::string skip_reason;
  std::int64_t tiles_processed = 0;
  ClassMetrics metrics;
  bool best = false;
};

struct AblationResult {
  std::vector<AblationRow> rows;  // grid order: classifier, level, tile size

  const AblationRow* find(const std::string& classifier, int level, int tile_size) const;
  const AblationRow* best() const;
  std::string to_csv() const;
  std::string to_text() const;
};

/// Train on the train split, score on the val split, pick the best cell by
/// macro F1 (ties: fewer tiles processed).
AblationResult run_ablation(const AblationGrid& grid, const GridDataProvider& data, const SplitAssignment& split);

/// Merges background/tissue into class 0, the negative output of models.
inline int negative_merged(int label) { return is_negative(label) ? 0 : label; }

}  // namespace pathqa
