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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "gtobench/proxy.hpp"

namespace gtobench {
namespace {

DecisionState state(double e, int k = 2, Street s = Street::kTurn,
                    Texture t = Texture::kDry) {
  DecisionState x;
  x.street = s;
  x.equity = e;
  x.texture = t;
  x.players = k;
  return x;
}

TEST_CASE("heads-up hinge with identity adjustments") {
  const ProxyParams p = ProxyParams::identity_adjustments();
  CHECK(headsup_proxy(state(0.5), p) == ActionDistribution::point_mass(Action::kCall));
  // w = (1, 1.05, 0)
  auto q = headsup_proxy(state(0.9), p);
  CHECK(q.call() == doctest::Approx(1.0 / 2.05));
  CHECK(q.raise() == doctest::Approx(1.05 / 2.05));
  CHECK(q.fold() == 0.0);
  CHECK(q.call() == doctest::Approx(0.4878).epsilon(1e-4));
  q = headsup_proxy(state(0.1), p);
  CHECK(q.call() == doctest::Approx(1.0 / 2.05));
  CHECK(q.raise() == 0.0);
  CHECK(q.fold() == doctest::Approx(1.05 / 2.05));
}

TEST_CASE("street and texture multipliers scale the weights") {
  const ProxyParams p;
  // River, monotone: w = (1 * 0.8, 1.05 * 1.2 * 1.1, 0).
  const auto q = headsup_proxy(state(0.9, 2, Street::kRiver, Texture::kMonotone), p);
  const double wc = 0.8, wr = 1.05 * 1.2 * 1.1;
  CHECK(q.call() == doctest::Approx(wc / (wc + wr)));
  CHECK(q.raise() == doctest::Approx(wr / (wc + wr)));
}

TEST_CASE("multiway_equity") {
  CHECK(multiway_equity(0.8, 3) == doctest::Approx(0.64));
  for (int k = 2; k <= 6; ++k) CHECK(multiway_equity(1.0, k) == 1.0);
  CHECK(multiway_equity(0.5, 6) == doctest::Approx(0.03125));
  CHECK(multiway_equity(0.7, 2) == 0.7);
}

TEST_CASE("multiway proxy") {
  const ProxyParams id = ProxyParams::identity_adjustments();
  for (int k = 3; k <= 6; ++k) {
    CHECK(multiway_proxy(state(1.0, k), id).argmax() == Action::kRaise);
  }
  CHECK(multiway_proxy(state(0.5, 6, Street::kPre), ProxyParams{}).argmax() ==
        Action::kFold);
  // k = 3 tightens both thresholds to 0.57 / 0.47; e^2 = 0.81.
  const auto q = multiway_proxy(state(0.9, 3), id);
  const double wr = 3 * (0.81 - 0.57);
  CHECK(q.raise() == doctest::Approx(wr / (1 + wr)));
}

TEST_CASE("showdown equity skips the transform") {
  DecisionState x = state(0.6, 4);
  x.equity_kind = EquityKind::kShowdown;
  CHECK(effective_equity(x) == 0.6);
  x.equity_kind = EquityKind::kPairwise;
  CHECK(effective_equity(x) == doctest::Approx(0.216));
}

TEST_CASE("proxies guard the player count") {
  const ProxyParams p;
  CHECK_THROWS_AS(headsup_proxy(state(0.5, 3), p), Error);
  CHECK_THROWS_AS(multiway_proxy(state(0.5, 2), p), Error);
  CHECK(reference_proxy(state(0.5, 2), p) == headsup_proxy(state(0.5, 2), p));
  CHECK(reference_proxy(state(0.5, 5), p) == multiway_proxy(state(0.5, 5), p));
}

TEST_CASE("proxy outputs are valid distributions over a grid") {
  const ProxyParams p;
  for (int k = 2; k <= 6; ++k) {
    for (Street s : kAllStreets) {
      for (Texture t : kAllTextures) {
        for (int i = 0; i <= 100; ++i) {
          CHECK_NOTHROW(validate_distribution(reference_proxy(state(i / 100.0, k, s, t), p)));
        }
      }
    }
  }
}

TEST_CASE("fold mass grows with the table at fixed equity") {
  const ProxyParams p;
  double prev = -1.0;
  for (int k = 3; k <= 6; ++k) {
    const double f = multiway_proxy(state(0.7, k), p).fold();
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("raise mass rises and fold mass falls with equity") {
  const ProxyParams p;
  for (int k = 2; k <= 6; ++k) {
    for (Street s : kAllStreets) {
      ActionDistribution prev = reference_proxy(state(0.0, k, s), p);
      for (int i = 1; i <= 200; ++i) {
        const auto q = reference_proxy(state(i / 200.0, k, s), p);
        CHECK(q.raise() >= prev.raise() - 1e-15);
        CHECK(q.fold() <= prev.fold() + 1e-15);
        prev = q;
      }
    }
  }
}

TEST_CASE("multiway construction at k = 2 without tightening is the heads-up proxy") {
  const ProxyParams p;
  for (int i = 0; i <= 100; ++i) {
    for (Texture t : kAllTextures) {
      const DecisionState x = state(i / 100.0, 2, Street::kFlop, t);
      CHECK(hinge_proxy(x.street, x.texture, multiway_equity(x.equity, 2), 2, 0.0, p) ==
            headsup_proxy(x, p));
    }
  }
}

TEST_CASE("validate rejects bad proxy params") {
  ProxyParams p;
  p.call_base_weight = 0.0;
  CHECK_THROWS_AS(validate(p), Error);
  p = ProxyParams{};
  p.multiway_tighten_per_player = -0.1;
  CHECK_THROWS_AS(validate(p), Error);
  p = ProxyParams{};
  p.raise_slope = -1.0;
  CHECK_THROWS_AS(validate(p), Error);
  p = ProxyParams{};
  p.fold_threshold = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(p), Error);
}

}  // namespace
}  // namespace gtobench
