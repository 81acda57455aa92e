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

#ifndef GTOBENCH_PROXY_HPP
#define GTOBENCH_PROXY_HPP

#include <array>

#include "gtobench/types.hpp"

namespace gtobench {

// Componentwise multipliers for the [call, raise, fold] weights.
using ActionMultipliers = std::array<double, kNumActions>;

struct ProxyParams {
  double raise_slope = 3.0;
  double raise_threshold = 0.55;
  double fold_slope = 3.0;
  double fold_threshold = 0.45;
  double call_base_weight = 1.0;
  // More calling early, more polarization on the river.
  std::array<ActionMultipliers, kNumStreets> street_adjust = {{
      {1.2, 1.0, 0.9},
      {1.1, 1.0, 1.0},
      {1.0, 1.0, 1.0},
      {0.8, 1.2, 1.2},
  }};
  // Paired boards get pot control; monotone and straighty boards more
  // aggression.
  std::array<ActionMultipliers, kNumTextures> texture_adjust = {{
      {1.0, 1.0, 1.0},
      {1.0, 0.85, 1.0},
      {1.0, 1.0, 1.0},
      {1.0, 1.1, 1.0},
      {1.0, 1.1, 1.0},
      {1.0, 0.85, 1.0},
  }};
  double multiway_tighten_per_player = 0.02;

  static ProxyParams identity_adjustments();
  friend bool operator==(const ProxyParams&, const ProxyParams&) = default;
};

void validate(const ProxyParams& p);

// e^(k-1): the chance of beating k-1 independent opponents.
double multiway_equity(double equity, int players);

// Equity the reference and the game should act on: pairwise equities at a
// multiway table are transformed, showdown equities are used as stored.
double effective_equity(const DecisionState& x);

// Shared hinge construction. Both thresholds are raised by
// tighten_per_player * (players - 2); equity is taken as already effective.
ActionDistribution hinge_proxy(Street street, Texture texture, double equity,
                               int players, double tighten_per_player,
                               const ProxyParams& p);

// Heads-up reference q(a|x). Throws kMultiwayState unless players == 2.
ActionDistribution headsup_proxy(const DecisionState& x, const ProxyParams& p);
// Multiway reference q_k(a|x). Throws kHeadsUpState when players == 2.
ActionDistribution multiway_proxy(const DecisionState& x, const ProxyParams& p);
// Dispatches on the player count.
ActionDistribution reference_proxy(const DecisionState& x,
                                   const ProxyParams& p);

}  // namespace gtobench

#endif  // GTOBENCH_PROXY_HPP
