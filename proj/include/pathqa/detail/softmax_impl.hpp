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

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

#include "pathqa/classes.hpp"
#include "pathqa/detail/bytes.hpp"

namespace pathqa {

namespace detail {

inline constexpr char kModelMagic[4] = {'P', 'Q', 'M', 'D'};
inline constexpr std::uint16_t kModelVersion = 1;

}  // namespace detail

template <typename Scalar>
SoftmaxRegression<Scalar>::SoftmaxRegression(std::vector<int> classes, int feature_count)
    : classes_(std::move(classes)),
      weights_(Matrix::Zero(static_cast<Eigen::Index>(classes_.size()), feature_count)),
      bias_(Vector::Zero(static_cast<Eigen::Index>(classes_.size()))),
      mean_(Vector::Zero(feature_count)),
      std_(Vector::Ones(feature_count)) {
  if (classes_.size() < 2) throw Error(Errc::invalid_argument, "softmax model needs at least two classes");
}

template <typename Scalar>
int SoftmaxRegression<Scalar>::position_of(int class_index) const noexcept {
  auto it = std::find(classes_.begin(), classes_.end(), class_index);
  return it == classes_.end() ? -1 : static_cast<int>(it - classes_.begin());
}

template <typename Scalar>
LossGradient<Scalar> cross_entropy_loss(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& weights,
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& bias,
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>& x,
    std::span<const int> target_positions, Scalar l2) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = x.rows();
  const Eigen::Index k = weights.rows();
  LossGradient<Scalar> out;
  out.d_weights = Matrix::Zero(k, weights.cols());
  out.d_bias = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(k);
  if (n == 0) {
    out.loss = l2 * weights.squaredNorm();
    out.d_weights = Scalar(2) * l2 * weights;
    return out;
  }
  // scores: n x k
  Matrix scores = (x * weights.transpose()).rowwise() + bias.transpose();
  Matrix residual(n, k);
  Scalar nll = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar top = scores.row(i).maxCoeff();
    auto shifted = (scores.row(i).array() - top).eval();
    const Scalar log_sum = std::log(shifted.exp().sum());
    const int t = target_positions[static_cast<std::size_t>(i)];
    nll -= shifted(t) - log_sum;
    residual.row(i) = (shifted - log_sum).exp().matrix();
    residual(i, t) -= Scalar(1);
  }
  const Scalar inv_n = Scalar(1) / static_cast<Scalar>(n);
  out.loss = nll * inv_n + l2 * weights.squaredNorm();
  out.d_weights = inv_n * residual.transpose() * x + Scalar(2) * l2 * weights;
  out.d_bias = inv_n * residual.colwise().sum().transpose();
  return out;
}

template <typename Scalar>
void SoftmaxRegression<Scalar>::fit(const Eigen::Ref<const RowMatrix>& features, std::span<const int> labels,
                                    const TrainingHyper& hyper, std::uint64_t /*seed*/) {
  if (features.rows() != static_cast<Eigen::Index>(labels.size()))
    throw Error(Errc::invalid_argument, "feature rows and labels differ in length");
  if (features.cols() != weights_.cols()) throw Error(Errc::invalid_argument, "feature dimension mismatch");
  if (!features.allFinite()) throw Error(Errc::invalid_argument, "non-finite feature value");
  if (hyper.epochs < 0 || !(hyper.learning_rate > 0) || hyper.l2 < 0)
    throw Error(Errc::invalid_argument, "invalid training hyperparameters");

  std::vector<int> positions(labels.size());
  std::vector<bool> seen(classes_.size(), false);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int p = position_of(labels[i]);
    if (p < 0) throw Error(Errc::invalid_argument, "label " + std::to_string(labels[i]) + " not in class list");
    positions[i] = p;
    seen[static_cast<std::size_t>(p)] = true;
  }
  if (std::count(seen.begin(), seen.end(), true) < 2)
    throw Error(Errc::invalid_argument, "training data contains fewer than two classes");

  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  mean_ = features.colwise().mean().transpose();
  std_.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Scalar var = (features.col(j).array() - mean_(j)).square().sum() / static_cast<Scalar>(n);
    const Scalar s = std::sqrt(var);
    std_(j) = s > Scalar(1e-12) ? s : Scalar(1);
  }
  RowMatrix x = (features.rowwise() - mean_.transpose()).array().rowwise() / std_.transpose().array();

  hyper_ = hyper;
  weights_.setZero();
  bias_.setZero();
  loss_history_.clear();
  loss_history_.reserve(static_cast<std::size_t>(hyper.epochs) + 1);
  const Scalar lr = static_cast<Scalar>(hyper.learning_rate);
  const Scalar l2 = static_cast<Scalar>(hyper.l2);
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    auto g = cross_entropy_loss<Scalar>(weights_, bias_, x, positions, l2);
    loss_history_.push_back(g.loss);
    weights_ -= lr * g.d_weights;
    bias_ -= lr * g.d_bias;
  }
  loss_history_.push_back(cross_entropy_loss<Scalar>(weights_, bias_, x, positions, l2).loss);
}

template <typename Scalar>
auto SoftmaxRegression<Scalar>::normalize(const Eigen::Ref<const Vector>& features) const -> Vector {
  if (features.size() != mean_.size()) throw Error(Errc::invalid_argument, "feature dimension mismatch");
  return ((features - mean_).array() / std_.array()).matrix();
}

template <typename Scalar>
auto SoftmaxRegression<Scalar>::scores(const Eigen::Ref<const Vector>& features) const -> Vector {
  return weights_ * normalize(features) + bias_;
}

template <typename Scalar>
auto SoftmaxRegression<Scalar>::predict(const Eigen::Ref<const Vector>& features) const -> Vector {
  return softmax(scores(features));
}

template <typename Scalar>
auto SoftmaxRegression<Scalar>::predict_batch(const Eigen::Ref<const RowMatrix>& features) const -> RowMatrix {
  RowMatrix out(features.rows(), class_count());
  for (Eigen::Index i = 0; i < features.rows(); ++i) out.row(i) = predict(features.row(i).transpose()).transpose();
  return out;
}

// PQMD layout (little-endian): magic, u16 version, u32 K, K x (u32 class
// index, string name), u32 D, f64 mean[D], f64 std[D], f64 W[K][D], f64 b[K],
// f64 learning_rate, u32 epochs, f64 l2.
template <typename Scalar>
std::vector<std::uint8_t> SoftmaxRegression<Scalar>::serialize() const {
  detail::ByteWriter w;
  w.put_bytes({reinterpret_cast<const std::uint8_t*>(detail::kModelMagic), 4});
  w.put<std::uint16_t>(detail::kModelVersion);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(classes_.size()));
  for (int c : classes_) {
    w.put<std::uint32_t>(static_cast<std::uint32_t>(c));
    w.put_string(c == 0 ? std::string_view("negative") : class_name(c));
  }
  const auto d = static_cast<std::uint32_t>(weights_.cols());
  w.put<std::uint32_t>(d);
  for (Eigen::Index j = 0; j < mean_.size(); ++j) w.put<double>(static_cast<double>(mean_(j)));
  for (Eigen::Index j = 0; j < std_.size(); ++j) w.put<double>(static_cast<double>(std_(j)));
  for (Eigen::Index r = 0; r < weights_.rows(); ++r)
    for (Eigen::Index c = 0; c < weights_.cols(); ++c) w.put<double>(static_cast<double>(weights_(r, c)));
  for (Eigen::Index r = 0; r < bias_.size(); ++r) w.put<double>(static_cast<double>(bias_(r)));
  w.put<double>(hyper_.learning_rate);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(hyper_.epochs));
  w.put<double>(hyper_.l2);
  return std::move(w.bytes());
}

template <typename Scalar>
SoftmaxRegression<Scalar> SoftmaxRegression<Scalar>::deserialize(std::span<const std::uint8_t> bytes) {
  detail::ByteReader r(bytes);
  auto magic = r.get_bytes(4);
  if (std::memcmp(magic.data(), detail::kModelMagic, 4) != 0) throw Error(Errc::format, "not a PQMD model file");
  if (r.get<std::uint16_t>() != detail::kModelVersion) throw Error(Errc::format, "unsupported model version");
  const auto k = r.get<std::uint32_t>();
  if (k < 2 || k > kClassCount) throw Error(Errc::format, "bad class count in model file");
  std::vector<int> classes;
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto c = r.get<std::uint32_t>();
    if (c >= static_cast<std::uint32_t>(kClassCount)) throw Error(Errc::format, "bad class index in model file");
    classes.push_back(static_cast<int>(c));
    r.get_string();
  }
  const auto d = r.get<std::uint32_t>();
  if (d == 0 || d > 4096) throw Error(Errc::format, "bad feature count in model file");
  SoftmaxRegression m(std::move(classes), static_cast<int>(d));
  for (std::uint32_t j = 0; j < d; ++j) m.mean_(j) = static_cast<Scalar>(r.get<double>());
  for (std::uint32_t j = 0; j < d; ++j) m.std_(j) = static_cast<Scalar>(r.get<double>());
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < d; ++j) m.weights_(i, j) = static_cast<Scalar>(r.get<double>());
  for (std::uint32_t i = 0; i < k; ++i) m.bias_(i) = static_cast<Scalar>(r.get<double>());
  m.hyper_.learning_rate = r.get<double>();
  m.hyper_.epochs = static_cast<int>(r.get<std::uint32_t>());
  m.hyper_.l2 = r.get<double>();
  if (r.remaining() != 0) throw Error(Errc::format, "trailing bytes in model file");
  if ((m.std_.array() <= Scalar(0)).any()) throw Error(Errc::format, "non-positive normalisation std");
  return m;
}

template <typename Scalar>
void SoftmaxRegression<Scalar>::save(const std::filesystem::path& path) const {
  const auto bytes = serialize();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io, "cannot write model " + path.string());
}

template <typename Scalar>
SoftmaxRegression<Scalar> SoftmaxRegression<Scalar>::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::not_found, "cannot open model " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace pathqa
