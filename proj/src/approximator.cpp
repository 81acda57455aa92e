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

#include "gtobench/approximator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gtobench {
namespace {

void softmax_inplace(std::span<double> v) {
  const double mx = *std::max_element(v.begin(), v.end());
  double total = 0.0;
  for (double& x : v) {
    x = std::exp(x - mx);
    total += x;
  }
  for (double& x : v) x /= total;
}

}  // namespace

std::array<double, kFeatureWidth> state_features(const DecisionState& x) {
  std::array<double, kFeatureWidth> f{};
  f[static_cast<std::size_t>(x.street)] = 1.0;
  f[4] = x.equity;
  f[5 + static_cast<std::size_t>(x.texture)] = 1.0;
  f[11] = (x.players - 2) / 4.0;
  return f;
}

void validate(const ApproximatorSpec& s) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kConfigError, "approximator: " + what);
  };
  if (s.input_width != kFeatureWidth) {
    fail("input_width must be " + std::to_string(kFeatureWidth));
  }
  if (s.output_width != static_cast<int>(kNumActions)) {
    fail("output_width must be 3");
  }
  if (s.hidden_width < 1) fail("hidden_width must be positive");
  if (s.hidden_layers < 1) fail("hidden_layers must be positive");
  if (s.batch_size < 1) fail("batch_size must be positive");
  if (s.buffer_capacity < 1) fail("buffer_capacity must be positive");
  if (!(s.learning_rate > 0.0 && s.learning_rate < 1.0)) {
    fail("learning_rate must be in (0, 1)");
  }
}

Mlp::Mlp(const ApproximatorSpec& spec, Rng& rng, bool zero_output_layer) {
  widths_.push_back(spec.input_width);
  for (int l = 0; l < spec.hidden_layers; ++l) widths_.push_back(spec.hidden_width);
  widths_.push_back(spec.output_width);
  std::size_t total = 0;
  for (std::size_t l = 0; l + 1 < widths_.size(); ++l) {
    offsets_.push_back(total);
    total += static_cast<std::size_t>(widths_[l + 1]) * (widths_[l] + 1);
  }
  params_.assign(total, 0.0);
  const std::size_t layers = widths_.size() - 1;
  for (std::size_t l = 0; l < layers; ++l) {
    if (zero_output_layer && l + 1 == layers) break;
    const int fan_in = widths_[l];
    const double limit = std::sqrt(6.0 / fan_in);
    const std::size_t n_weights = static_cast<std::size_t>(widths_[l + 1]) * fan_in;
    for (std::size_t i = 0; i < n_weights; ++i) {
      params_[offsets_[l] + i] = (2.0 * rng.uniform() - 1.0) * limit;
    }
  }
}

std::vector<double> Mlp::forward(std::span<const double> input) const {
  std::vector<double> a(input.begin(), input.end());
  const std::size_t layers = widths_.size() - 1;
  for (std::size_t l = 0; l < layers; ++l) {
    const int in = widths_[l];
    const int out = widths_[l + 1];
    const double* w = params_.data() + offsets_[l];
    const double* b = w + static_cast<std::size_t>(out) * in;
    std::vector<double> z(out);
    for (int o = 0; o < out; ++o) {
      double acc = b[o];
      for (int i = 0; i < in; ++i) acc += w[o * in + i] * a[i];
      z[o] = (l + 1 < layers) ? std::max(0.0, acc) : acc;
    }
    a = std::move(z);
  }
  return a;
}

double Mlp::loss(std::span<const double> inputs, std::span<const double> targets,
                 std::size_t batch, Loss kind, std::vector<double>* grad) const {
  const std::size_t in_w = widths_.front();
  const std::size_t out_w = widths_.back();
  const std::size_t layers = widths_.size() - 1;
  if (inputs.size() != batch * in_w || targets.size() != batch * out_w ||
      batch == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Mlp::loss: batch shape mismatch");
  }
  if (grad) grad->assign(params_.size(), 0.0);

  double total = 0.0;
  std::vector<std::vector<double>> acts(layers + 1);
  for (std::size_t n = 0; n < batch; ++n) {
    acts[0].assign(inputs.begin() + n * in_w, inputs.begin() + (n + 1) * in_w);
    for (std::size_t l = 0; l < layers; ++l) {
      const int in = widths_[l];
      const int out = widths_[l + 1];
      const double* w = params_.data() + offsets_[l];
      const double* b = w + static_cast<std::size_t>(out) * in;
      acts[l + 1].assign(out, 0.0);
      for (int o = 0; o < out; ++o) {
        double acc = b[o];
        for (int i = 0; i < in; ++i) acc += w[o * in + i] * acts[l][i];
        acts[l + 1][o] = (l + 1 < layers) ? std::max(0.0, acc) : acc;
      }
    }

    const std::vector<double>& y = acts[layers];
    std::span<const double> t = targets.subspan(n * out_w, out_w);
    std::vector<double> delta(out_w);
    if (kind == Loss::kMeanSquaredError) {
      const double scale = 1.0 / static_cast<double>(batch * out_w);
      for (std::size_t o = 0; o < out_w; ++o) {
        const double d = y[o] - t[o];
        total += d * d * scale;
        delta[o] = 2.0 * d * scale;
      }
    } else {
      std::vector<double> p = y;
      softmax_inplace(p);
      const double mx = *std::max_element(y.begin(), y.end());
      double lse = 0.0;
      for (double v : y) lse += std::exp(v - mx);
      lse = mx + std::log(lse);
      double t_sum = 0.0;
      for (std::size_t o = 0; o < out_w; ++o) {
        total -= t[o] * (y[o] - lse) / static_cast<double>(batch);
        t_sum += t[o];
      }
      for (std::size_t o = 0; o < out_w; ++o) {
        delta[o] = (p[o] * t_sum - t[o]) / static_cast<double>(batch);
      }
    }
    if (!grad) continue;

    for (std::size_t l = layers; l-- > 0;) {
      const int in = widths_[l];
      const int out = widths_[l + 1];
      double* gw = grad->data() + offsets_[l];
      double* gb = gw + static_cast<std::size_t>(out) * in;
      const double* w = params_.data() + offsets_[l];
      for (int o = 0; o < out; ++o) {
        gb[o] += delta[o];
        for (int i = 0; i < in; ++i) gw[o * in + i] += delta[o] * acts[l][i];
      }
      if (l == 0) break;
      std::vector<double> prev(in, 0.0);
      for (int i = 0; i < in; ++i) {
        if (acts[l][i] <= 0.0) continue;  // rectifier gate
        double acc = 0.0;
        for (int o = 0; o < out; ++o) acc += w[o * in + i] * delta[o];
        prev[i] = acc;
      }
      delta = std::move(prev);
    }
  }
  return total;
}

void Mlp::sgd_step(std::span<const double> grad, double learning_rate) {
  if (grad.size() != params_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "Mlp::sgd_step: size mismatch");
  }
  for (std::size_t i = 0; i < params_.size(); ++i) {
    params_[i] -= learning_rate * grad[i];
  }
}

std::array<double, kNumActions> softmax3(std::span<const double> logits) {
  std::array<double, kNumActions> p{logits[0], logits[1], logits[2]};
  softmax_inplace(p);
  return p;
}

ReservoirBuffer::ReservoirBuffer(std::size_t capacity, std::size_t input_width,
                                 std::size_t target_width)
    : capacity_(capacity),
      input_width_(input_width),
      target_width_(target_width) {
  if (capacity == 0) {
    throw Error(ErrorCode::kConfigError, "reservoir capacity must be positive");
  }
}

void ReservoirBuffer::store(std::size_t slot, std::span<const double> input,
                            std::span<const double> target) {
  std::copy(input.begin(), input.end(), inputs_.begin() + slot * input_width_);
  std::copy(target.begin(), target.end(),
            targets_.begin() + slot * target_width_);
}

void ReservoirBuffer::add(std::span<const double> input,
                          std::span<const double> target, Rng& rng) {
  ++seen_;
  if (size_ < capacity_) {
    inputs_.resize((size_ + 1) * input_width_);
    targets_.resize((size_ + 1) * target_width_);
    store(size_, input, target);
    ++size_;
    return;
  }
  const std::uint64_t slot = rng.uniform_int(seen_);
  if (slot < capacity_) store(slot, input, target);
}

void ReservoirBuffer::sample(std::size_t count, Rng& rng,
                             std::vector<double>& inputs,
                             std::vector<double>& targets) const {
  if (size_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sampling an empty reservoir");
  }
  inputs.resize(count * input_width_);
  targets.resize(count * target_width_);
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t slot = rng.uniform_int(size_);
    std::copy_n(inputs_.begin() + slot * input_width_, input_width_,
                inputs.begin() + n * input_width_);
    std::copy_n(targets_.begin() + slot * target_width_, target_width_,
                targets.begin() + n * target_width_);
  }
}

}  // namespace gtobench
