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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pathqa/error.hpp"
#include "pathqa/features.hpp"

namespace pathqa {

struct TrainingHyper {
  double learning_rate = 0.5;
  int epochs = 500;
  double l2 = 1e-4;
};

/// Numerically stable softmax of a score vector.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> softmax(const Eigen::MatrixBase<Derived>& scores) {
  using Scalar = typename Derived::Scalar;
  const Scalar top = scores.maxCoeff();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> e = (scores.array() - top).exp().matrix();
  return e / e.sum();
}

/// Multinomial logistic regression over z-scored features.
///
/// `classes` holds the class index each output row stands for; by
/// convention index 0 is the merged negative set {background, tissue}.
template <typename Scalar>
class SoftmaxRegression {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SoftmaxRegression() = default;
  SoftmaxRegression(std::vector<int> classes, int feature_count);

  const std::vector<int>& classes() const noexcept { return classes_; }
  int class_count() const noexcept { return static_cast<int>(classes_.size()); }
  int feature_count() const noexcept { return static_cast<int>(weights_.cols()); }

  const Matrix& weights() const noexcept { return weights_; }
  const Vector& bias() const noexcept { return bias_; }
  const Vector& feature_mean() const noexcept { return mean_; }
  const Vector& feature_std() const noexcept { return std_; }
  const TrainingHyper& hyper() const noexcept { return hyper_; }
  const std::vector<Scalar>& loss_history() const noexcept { return loss_history_; }

  Matrix& weights() noexcept { return weights_; }
  Vector& bias() noexcept { return bias_; }

  /// Position of a class index in classes(), or -1.
  int position_of(int class_index) const noexcept;

  /// Fits normalisation statistics and weights. `labels` are class indices
  /// drawn from classes(). Zero initialisation makes the result independent
  /// of `seed`, which is accepted for interface stability.
  void fit(const Eigen::Ref<const RowMatrix>& features, std::span<const int> labels, const TrainingHyper& hyper,
           std::uint64_t seed = 0);

  Vector normalize(const Eigen::Ref<const Vector>& features) const;
  Vector scores(const Eigen::Ref<const Vector>& features) const;
  Vector predict(const Eigen::Ref<const Vector>& features) const;
  /// Row i holds the probabilities for features row i.
  RowMatrix predict_batch(const Eigen::Ref<const RowMatrix>& features) const;

  void save(const std::filesystem::path& path) const;
  static SoftmaxRegression load(const std::filesystem::path& path);
  std::vector<std::uint8_t> serialize() const;
  static SoftmaxRegression deserialize(std::span<const std::uint8_t> bytes);

 private:
  std::vector<int> classes_;
  Matrix weights_;  // classes x features
  Vector bias_;
  Vector mean_;
  Vector std_;
  TrainingHyper hyper_;
  std::vector<Scalar> loss_history_;
};

using SoftmaxModel = SoftmaxRegression<double>;

/// Mean cross-entropy of normalised rows `x` (one-hot targets by position)
/// plus l2 * ||W||^2, and its gradient. Bias is not regularised.
template <typename Scalar>
struct LossGradient {
  Scalar loss{};
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> d_weights;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d_bias;
};

template <typename Scalar>
LossGradient<Scalar> cross_entropy_loss(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& weights,
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& bias,
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>& x,
    std::span<const int> target_positions, Scalar l2);

/// Features/labels for training; rows align with labels.
struct TrainingSet {
  FeatureMatrix features;
  std::vector<int> labels;
};

/// One-vs-negative screener: positives are tiles labeled `artifact_class`,
/// negatives are background/tissue tiles, other artifacts are excluded.
/// Output classes are {0, artifact_class}.
SoftmaxModel train_binary_screener(int artifact_class, const TrainingSet& data, const TrainingHyper& hyper);

/// Multiclass model over {0} plus `artifact_classes`; tiles of other
/// artifacts are excluded and background/tissue merge into class 0.
SoftmaxModel train_multiclass(std::span<const int> artifact_classes, const TrainingSet& data,
                              const TrainingHyper& hyper);

}  // namespace pathqa

#include "pathqa/detail/softmax_impl.hpp"
