// Copyright 2026 The gtobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GTOBENCH_APPROXIMATOR_HPP
#define GTOBENCH_APPROXIMATOR_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "gtobench/rng.hpp"
#include "gtobench/types.hpp"

namespace gtobench {

inline constexpr int kFeatureWidth = 12;

// Street one-hot (4), equity (1), texture one-hot (6), (k - 2) / 4 (1).
std::array<double, kFeatureWidth> state_features(const DecisionState& x);

struct ApproximatorSpec {
  int input_width = kFeatureWidth;
  int hidden_width = 32;
  int hidden_layers = 1;
  int output_width = 3;
  double learning_rate = 0.01;
  int batch_size = 64;
  int buffer_capacity = 100000;

  friend bool operator==(const ApproximatorSpec&,
                         const ApproximatorSpec&) = default;
};

// Throws kConfigError when a width, capacity or rate is out of range.
void validate(const ApproximatorSpec& spec);

enum class Loss {
  // Mean over batch and outputs of (y - t)^2.
  kMeanSquaredError,
  // Mean over batch of -sum_o t_o log softmax(y)_o.
  kSoftmaxCrossEntropy,
};

// Fully connected rectifier network with a linear output layer. Parameters
// live in one flat vector: per layer, weights (row-major, out x in) then
// biases.
class Mlp {
 public:
  // He-uniform weights, zero biases. `zero_output_layer` zeroes the last
  // layer's weights so every output starts equal.
  Mlp(const ApproximatorSpec& spec, Rng& rng, bool zero_output_layer);

  std::vector<double> forward(std::span<const double> input) const;

  // Loss over a batch; when `grad` is non-null it receives dLoss/dparams.
  // `inputs` and `targets` are row-major batch x width.
  double loss(std::span<const double> inputs, std::span<const double> targets,
              std::size_t batch, Loss kind,
              std::vector<double>* grad = nullptr) const;

  void sgd_step(std::span<const double> grad, double learning_rate);

  std::span<double> parameters() { return params_; }
  std::span<const double> parameters() const { return params_; }
  int input_width() const { return widths_.front(); }
  int output_width() const { return widths_.back(); }

 private:
  std::vector<int> widths_;
  std::vector<std::size_t> offsets_;  // start of each layer's block
  std::vector<double> params_;
};

std::array<double, kNumActions> softmax3(std::span<const double> logits);

// Fixed-capacity uniform reservoir (Algorithm R) of training examples.
class ReservoirBuffer {
 public:
  ReservoirBuffer(std::size_t capacity, std::size_t input_width,
                  std::size_t target_width);

  void add(std::span<const double> input, std::span<const double> target,
           Rng& rng);
  // Draws `count` stored examples with replacement into the output rows.
  void sample(std::size_t count, Rng& rng, std::vector<double>& inputs,
              std::vector<double>& targets) const;

  std::size_t size() const { return size_; }
  std::size_t seen() const { return seen_; }
  std::size_t capacity() const { return capacity_; }

 private:
  void store(std::size_t slot, std::span<const double> input,
             std::span<const double> target);

  std::size_t capacity_;
  std::size_t input_width_;
  std::size_t target_width_;
  std::size_t size_ = 0;
  std::size_t seen_ = 0;
  std::vector<double> inputs_;
  std::vector<double> targets_;
};

}  // namespace gtobench

#endif  // GTOBENCH_APPROXIMATOR_HPP
