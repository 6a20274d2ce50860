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

#include <atomic>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pathqa/pyramid.hpp"
#include "pathqa/softmax.hpp"

namespace pathqa {

/// Anything that maps tiles to probability vectors over classes().
/// Implementations must be safe to call concurrently.
class TileClassifier {
 public:
  virtual ~TileClassifier() = default;
  /// Class index per output position; 0 stands for the negative set.
  virtual const std::vector<int>& classes() const = 0;
  virtual std::vector<Eigen::VectorXd> predict(std::span<const RasterTile> tiles) const = 0;
};

class NativeClassifier final : public TileClassifier {
 public:
  explicit NativeClassifier(SoftmaxModel model, Rgb unscanned_fill = kUnscannedGreen)
      : model_(std::move(model)), fill_(unscanned_fill) {}
  const std::vector<int>& classes() const override { return model_.classes(); }
  std::vector<Eigen::VectorXd> predict(std::span<const RasterTile> tiles) const override;
  const SoftmaxModel& model() const noexcept { return model_; }

 private:
  SoftmaxModel model_;
  Rgb fill_;
};

/// Client for an external inference server.
///
///   POST /v1/predict
///   {"model": str, "tile_size": int, "level": int,
///    "tiles": [{"id": str, "png_base64": str}]}
///   -> {"classes": [str], "predictions": [{"id": str, "probs": [float]}]}
///
/// Class names use the class table with "negative" for index 0. Responses
/// must list exactly the expected classes; probability vectors whose sum is
/// off by more than 1e-6 are renormalised and counted as warnings.
class RemoteClassifier final : public TileClassifier {
 public:
  RemoteClassifier(std::string endpoint, std::string model, std::vector<int> classes, int level, int tile_size,
                   std::size_t batch_size = 64);

  const std::vector<int>& classes() const override { return classes_; }
  std::vector<Eigen::VectorXd> predict(std::span<const RasterTile> tiles) const override;

  std::size_t renormalized_count() const noexcept { return renormalized_.load(); }

 private:
  std::vector<Eigen::VectorXd> predict_batch(std::span<const RasterTile> tiles, std::size_t first_id) const;

  std::string endpoint_;
  std::string model_;
  std::vector<int> classes_;
  int level_;
  int tile_size_;
  std::size_t batch_size_;
  mutable std::atomic<std::size_t> renormalized_{0};
};

inline std::vector<Eigen::VectorXd> remote_predict(const RemoteClassifier& client, std::span<const RasterTile> tiles) {
  return client.predict(tiles);
}

/// Name used on the wire for a class index (0 -> "negative").
std::string wire_class_name(int c);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace pathqa
