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

#include "gtobench/proxy.hpp"

#include <algorithm>
#include <cmath>

namespace gtobench {

ProxyParams ProxyParams::identity_adjustments() {
  ProxyParams p;
  for (auto& m : p.street_adjust) m = {1.0, 1.0, 1.0};
  for (auto& m : p.texture_adjust) m = {1.0, 1.0, 1.0};
  return p;
}

void validate(const ProxyParams& p) {
  auto fail = [](const char* what) {
    throw Error(ErrorCode::kConfigError, what);
  };
  if (!(p.call_base_weight > 0.0)) fail("proxy.call_base_weight must be > 0");
  if (!(p.raise_slope >= 0.0 && p.fold_slope >= 0.0)) fail("proxy slopes must be >= 0");
  if (!std::isfinite(p.raise_slope) || !std::isfinite(p.fold_slope) ||
      !std::isfinite(p.raise_threshold) || !std::isfinite(p.fold_threshold)) {
    fail("proxy slopes and thresholds must be finite");
  }
  if (!(p.fold_threshold <= p.raise_threshold)) {
    fail("proxy.fold_threshold must not exceed proxy.raise_threshold");
  }
  if (!(p.multiway_tighten_per_player >= 0.0)) {
    fail("proxy.multiway_tighten_per_player must be >= 0");
  }
  for (const auto& m : p.street_adjust) {
    for (double v : m) {
      if (!(v > 0.0)) fail("proxy.street_adjust multipliers must be > 0");
    }
  }
  for (const auto& m : p.texture_adjust) {
    for (double v : m) {
      if (!(v > 0.0)) fail("proxy.texture_adjust multipliers must be > 0");
    }
  }
}

double multiway_equity(double equity, int players) {
  if (!(equity >= 0.0 && equity <= 1.0) || players < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "multiway_equity needs e in [0,1] and k >= 2");
  }
  return std::pow(equity, players - 1);
}

double effective_equity(const DecisionState& x) {
  if (x.players == 2 || x.equity_kind == EquityKind::kShowdown) {
    return x.equity;
  }
  return multiway_equity(x.equity, x.players);
}

ActionDistribution hinge_proxy(Street street, Texture texture, double equity,
                               int players, double tighten_per_player,
                               const ProxyParams& p) {
  const double shift = tighten_per_player * (players - 2);
  std::array<double, kNumActions> w = {
      p.call_base_weight,
      std::max(0.0, p.raise_slope * (equity - (p.raise_threshold + shift))),
      std::max(0.0, p.fold_slope * ((p.fold_threshold + shift) - equity)),
  };
  const auto& sm = p.street_adjust[static_cast<std::size_t>(street)];
  const auto& tm = p.texture_adjust[static_cast<std::size_t>(texture)];
  for (std::size_t a = 0; a < kNumActions; ++a) w[a] *= sm[a] * tm[a];
  return ActionDistribution::from_weights(w);
}

ActionDistribution headsup_proxy(const DecisionState& x, const ProxyParams& p) {
  validate_state(x);
  if (x.players != 2) {
    throw Error(ErrorCode::kMultiwayState,
                "headsup_proxy called on a multiway state");
  }
  return hinge_proxy(x.street, x.texture, x.equity, 2, 0.0, p);
}

ActionDistribution multiway_proxy(const DecisionState& x,
                                  const ProxyParams& p) {
  validate_state(x);
  if (x.players == 2) {
    throw Error(ErrorCode::kHeadsUpState,
                "multiway_proxy called on a heads-up state");
  }
  return hinge_proxy(x.street, x.texture, effective_equity(x), x.players,
                     p.multiway_tighten_per_player, p);
}

ActionDistribution reference_proxy(const DecisionState& x,
                                   const ProxyParams& p) {
  return x.players == 2 ? headsup_proxy(x, p) : multiway_proxy(x, p);
}

}  // namespace gtobench
