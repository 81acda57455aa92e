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

#include "gtobench/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace gtobench {

int top1_agreement(const ActionDistribution& p, const ActionDistribution& q) {
  return p.argmax() == q.argmax() ? 1 : 0;
}

double kl_divergence(const ActionDistribution& p, const ActionDistribution& q) {
  double total = 0.0;
  for (std::size_t a = 0; a < kNumActions; ++a) {
    if (p[a] == 0.0) continue;
    const double pa = std::max(p[a], kProbabilityFloor);
    const double qa = std::max(q[a], kProbabilityFloor);
    total += p[a] * std::log(pa / qa);
  }
  return std::max(0.0, total);
}

double cross_entropy(const ActionDistribution& q, const ActionDistribution& p) {
  double total = 0.0;
  for (std::size_t a = 0; a < kNumActions; ++a) {
    if (q[a] == 0.0) continue;
    total -= q[a] * std::log(std::max(p[a], kProbabilityFloor));
  }
  return total;
}

double entropy(const ActionDistribution& q) {
  double total = 0.0;
  for (std::size_t a = 0; a < kNumActions; ++a) {
    if (q[a] > 0.0) total -= q[a] * std::log(q[a]);
  }
  return total;
}

double exploitability_gap(const PayoffMatrix& m,
                          const ActionDistribution& hero) {
  const double value = solve_equilibrium_bruteforce(m).value;
  return std::max(0.0, value - guaranteed_value(m, hero));
}

double nashconv_heuristic(const TrainedPolicy& policy,
                          std::span<const DecisionState> states,
                          const GameParams& g) {
  if (states.empty()) {
    throw Error(ErrorCode::kEmptyEvalSet, "nashconv over no states");
  }
  double total = 0.0;
  for (const auto& x : states) {
    total += exploitability_gap(payoff_matrix(x, g), policy.query(x));
  }
  return total / static_cast<double>(states.size());
}

double profile_nashconv(const PayoffMatrix& m, const ActionDistribution& hero,
                        const VillainDistribution& villain) {
  return std::max(0.0, best_response_value(m, villain) - guaranteed_value(m, hero));
}

double mean(std::span<const double> values) {
  double total = 0.0;
  for (double v : values) total += v;
  return values.empty() ? 0.0 : total / static_cast<double>(values.size());
}

Interval confidence_interval(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::kTooFewRuns,
                "confidence interval needs at least two runs");
  }
  const double mu = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  const double n = static_cast<double>(values.size());
  const double sd = std::sqrt(ss / (n - 1.0));
  return {mu, 1.96 * sd / std::sqrt(n)};
}

}  // namespace gtobench
