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

#include <Eigen/Core>

#include "pathqa/image.hpp"
#include "pathqa/pyramid.hpp"

namespace pathqa {

inline constexpr int kFeatureCount = 24;

template <typename Scalar>
using FeatureVectorT = Eigen::Matrix<Scalar, kFeatureCount, 1>;
using FeatureVector = FeatureVectorT<double>;

/// Row-major feature matrix, one tile per row.
template <typename Scalar>
using FeatureMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, kFeatureCount, Eigen::RowMajor>;
using FeatureMatrix = FeatureMatrixT<double>;

// Feature layout. Channels are normalised to [0, 1] and every statistic is
// computed over the tile's valid region only.
enum Feature : int {
  kMeanR = 0, kMeanG, kMeanB,
  kStdR, kStdG, kStdB,
  kMeanSaturation,
  kMeanLuminance,
  kWhiteFraction,     // luminance >= 0.88, not unscanned fill
  kDarkFraction,      // luminance < 0.35
  kGreenFillFraction, // exactly the unscanned fill colour
  kLaplacianVariance, // 3x3 [0 1 0; 1 -4 1; 0 1 0] on luminance, interior pixels
  kMeanGradient,      // central differences, interior pixels
  kHighFrequencyRatio,// var(lum - box4(lum)) / (var(lum) + 1e-8)
  kHueBin0,           // 8 bins of 45 degrees, chromatic pixels only
  kRowAutocorrelation = kHueBin0 + 8,  // profile over x (mean of each column)
  kColumnAutocorrelation,              // profile over y (mean of each row)
};
static_assert(kColumnAutocorrelation + 1 == kFeatureCount);

inline constexpr int kMinLag = 4;
inline constexpr int kMaxLag = 32;

FeatureVector extract_features(const RasterTile& tile, Rgb unscanned_fill = kUnscannedGreen);

/// Max Pearson correlation of `signal` with itself shifted by lags in
/// [kMinLag, kMaxLag]; 0 when either side has zero variance.
double autocorrelation_peak(const Eigen::Ref<const Eigen::VectorXd>& signal, int* best_lag = nullptr);

}  // namespace pathqa
