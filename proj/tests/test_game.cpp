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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gtobench/game.hpp"
#include "gtobench/state_gen.hpp"

namespace gtobench {
namespace {

DecisionState state(double e, Street s = Street::kTurn, int k = 2) {
  DecisionState x;
  x.street = s;
  x.equity = e;
  x.players = k;
  return x;
}

PayoffMatrix matrix(std::array<double, 6> v) {
  PayoffMatrix m;
  m.entries = {{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}}};
  return m;
}

// Bounds on the game value from grids over both players' strategies.
std::pair<double, double> grid_value_bounds(const PayoffMatrix& m) {
  const int n = 400;
  double lower = -1e300;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const double a = double(i) / n, b = double(j) / n, c = 1 - a - b;
      const double v0 = a * m.at(0, 0) + b * m.at(1, 0) + c * m.at(2, 0);
      const double v1 = a * m.at(0, 1) + b * m.at(1, 1) + c * m.at(2, 1);
      lower = std::max(lower, std::min(v0, v1));
    }
  }
  double upper = 1e300;
  for (int i = 0; i <= 100000; ++i) {
    const double t = i / 100000.0;
    double u = -1e300;
    for (int r = 0; r < 3; ++r) u = std::max(u, t * m.at(r, 0) + (1 - t) * m.at(r, 1));
    upper = std::min(upper, u);
  }
  return {lower, upper};
}

TEST_CASE("payoff entries") {
  const GameParams g;
  auto m = payoff_matrix(state(0.5), g);
  CHECK(m.at(Action::kCall, VillainAction::kPassive) == 0.0);
  CHECK(m.at(Action::kCall, VillainAction::kAggressive) == 0.0);
  CHECK(m.at(Action::kRaise, VillainAction::kPassive) == doctest::Approx(0.3));
  CHECK(m.at(Action::kFold, VillainAction::kPassive) == -0.5);
  CHECK(m.at(Action::kFold, VillainAction::kAggressive) == -0.5);
  m = payoff_matrix(state(1.0), g);
  CHECK(m.at(Action::kRaise, VillainAction::kAggressive) == doctest::Approx(3.0));
  CHECK(m.at(Action::kRaise, VillainAction::kPassive) == doctest::Approx(0.3 + 0.7 * 2));
}

TEST_CASE("multiway matrices use the transformed equity") {
  const GameParams g;
  const auto m = payoff_matrix(state(0.8, Street::kTurn, 3), g);
  CHECK(m.at(0, 0) == doctest::Approx(2 * 0.64 - 1));
}

TEST_CASE("texture multiplier scales fold equity") {
  GameParams g;
  g.texture_fold_equity_adjust[1] = 2.0;
  DecisionState x = state(0.5);
  x.texture = Texture::kPaired;
  CHECK(payoff_matrix(x, g).at(1, 0) == doctest::Approx(0.6));
}

TEST_CASE("dominant row is played pure") {
  const auto eq = solve_equilibrium_bruteforce(payoff_matrix(state(1.0), GameParams{}));
  CHECK(eq.hero == ActionDistribution::point_mass(Action::kRaise));
  CHECK(eq.value == doctest::Approx(1.7));
  CHECK(eq.hero_unique);
}

TEST_CASE("embedded matching pennies") {
  const auto m = matrix({1, -1, -1, 1, -10, -10});
  const auto eq = solve_equilibrium_bruteforce(m);
  CHECK(eq.hero.call() == doctest::Approx(0.5));
  CHECK(eq.hero.raise() == doctest::Approx(0.5));
  CHECK(eq.hero.fold() == doctest::Approx(0.0));
  CHECK(std::abs(eq.value) < 1e-12);
  CHECK(eq.villain[0] == doctest::Approx(0.5));
}

TEST_CASE("duplicate optimal rows are reported as non-unique") {
  const auto eq = solve_equilibrium_bruteforce(matrix({1, 1, 1, 1, 0, 0}));
  CHECK(eq.value == 1.0);
  CHECK_FALSE(eq.hero_unique);
}

TEST_CASE("solver is a minimax certificate on random matrices") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<double, 6> v;
    for (double& x : v) x = rng.uniform() * 4 - 2;
    const auto m = matrix(v);
    const auto eq = solve_equilibrium_bruteforce(m);
    CHECK(guaranteed_value(m, eq.hero) == doctest::Approx(eq.value).epsilon(1e-10));
    CHECK(std::abs(best_response_value(m, eq.villain) - eq.value) < 1e-10);
    const auto [lo, hi] = grid_value_bounds(m);
    CHECK(lo <= eq.value + 1e-10);
    CHECK(eq.value <= hi + 1e-10);
  }
}

TEST_CASE("solver on generated states") {
  GeneratorConfig cfg;
  Rng rng(78);
  const GameParams g;
  for (int i = 0; i < 500; ++i) {
    const auto m = payoff_matrix(sample_state(cfg, rng), g);
    const auto eq = solve_equilibrium_bruteforce(m);
    CHECK(std::abs(guaranteed_value(m, eq.hero) - eq.value) < 1e-10);
    CHECK(std::abs(best_response_value(m, eq.villain) - eq.value) < 1e-10);
  }
}

TEST_CASE("equilibrium value is non-decreasing in equity") {
  const GameParams g;
  for (Street s : kAllStreets) {
    double prev = -1e300;
    for (int i = 0; i <= 200; ++i) {
      const double v =
          solve_equilibrium_bruteforce(payoff_matrix(state(i / 200.0, s), g)).value;
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("sample_villain_payoff") {
  const GameParams g;
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_villain_payoff(state(0.7), Action::kFold, g, {1.0, 0.0}, rng) == -0.5);
  }
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    sum += sample_villain_payoff(state(1.0), Action::kCall, g, {0.5, 0.5}, rng);
  }
  // Entries 1 and 2 with equal mass: sd 0.5.
  CHECK(std::abs(sum / n - 1.5) < 3 * 0.5 / std::sqrt(n));
  const auto m = payoff_matrix(state(0.3), g);
  CHECK(sample_villain_payoff(state(0.3), Action::kRaise, g, {1.0, 0.0}, rng) ==
        row_values(m, {1.0, 0.0})[1]);
}

TEST_CASE("matrix CSV has six numbers per state") {
  std::ostringstream out;
  write_matrices_csv(out, {state(1.0)}, GameParams{});
  CHECK(out.str() ==
        "street,equity,texture,players,call_passive,call_aggressive,"
        "raise_passive,raise_aggressive,fold_passive,fold_aggressive\n"
        "turn,1,dry,2,1,2,1.7,3,-0.5,-0.5\n");
}

TEST_CASE("validate rejects bad game params") {
  GameParams g;
  g.bet_by_street[0] = 0.0;
  CHECK_THROWS_AS(validate(g), Error);
  g = GameParams{};
  g.fold_equity = 1.5;
  CHECK_THROWS_AS(validate(g), Error);
}

}  // namespace
}  // namespace gtobench
