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

#ifndef GTOBENCH_METRICS_HPP
#define GTOBENCH_METRICS_HPP

#include <span>
#include <vector>

#include "gtobench/game.hpp"
#include "gtobench/learners.hpp"
#include "gtobench/types.hpp"

namespace gtobench {

// Probabilities are floored here before any logarithm.
inline constexpr double kProbabilityFloor = 1e-9;

// 1 when both argmaxes (canonical tie-break) agree.
int top1_agreement(const ActionDistribution& p, const ActionDistribution& q);

// KL(p || q) in nats. Zero-probability terms of p contribute nothing; other
// terms floor both sides at 1e-9. The floor can push the raw sum a hair
// below zero, so the result is clamped at zero.
double kl_divergence(const ActionDistribution& p, const ActionDistribution& q);

// CE(q, p) = -sum_a q(a) ln p(a) in nats, with p floored at 1e-9.
double cross_entropy(const ActionDistribution& q, const ActionDistribution& p);

// H(q) in nats.
double entropy(const ActionDistribution& q);

// Gap between the equilibrium value and what `hero` guarantees against a
// best-responding villain on one state's game. Never negative.
double exploitability_gap(const PayoffMatrix& m, const ActionDistribution& hero);

// Mean exploitability_gap of the policy over `states`. Throws kEmptyEvalSet.
double nashconv_heuristic(const TrainedPolicy& policy,
                          std::span<const DecisionState> states,
                          const GameParams& g);

// Sum of both players' best-response gains against the profile.
double profile_nashconv(const PayoffMatrix& m, const ActionDistribution& hero,
                        const VillainDistribution& villain);

struct Interval {
  double mean = 0.0;
  double halfwidth = 0.0;
};

// mean +/- 1.96 * s / sqrt(n), sample standard deviation. Throws kTooFewRuns
// below two values.
Interval confidence_interval(std::span<const double> values);

double mean(std::span<const double> values);

}  // namespace gtobench

#endif  // GTOBENCH_METRICS_HPP
