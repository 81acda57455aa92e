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

#ifndef GTOBENCH_GAME_HPP
#define GTOBENCH_GAME_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "gtobench/rng.hpp"
#include "gtobench/types.hpp"

namespace gtobench {

// The abstract villain's replies, in column order.
enum class VillainAction : std::uint8_t { kPassive = 0, kAggressive };
inline constexpr std::size_t kNumVillainActions = 2;

using VillainDistribution = std::array<double, kNumVillainActions>;

// Hero payoffs in pots, rows [call, raise, fold] x columns [passive,
// aggressive]. The villain receives the negation.
struct PayoffMatrix {
  std::array<std::array<double, kNumVillainActions>, kNumActions> entries{};

  double at(Action a, VillainAction v) const {
    return entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)];
  }
  double& at(std::size_t row, std::size_t col) { return entries[row][col]; }
  double at(std::size_t row, std::size_t col) const {
    return entries[row][col];
  }
  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;
};

struct GameParams {
  std::array<double, kNumStreets> bet_by_street = {0.5, 0.75, 1.0, 1.25};
  double fold_equity = 0.3;
  double fold_cost = 0.5;
  std::array<double, kNumTextures> texture_fold_equity_adjust = {
      1.0, 1.0, 1.0, 1.0, 1.0, 1.0};

  friend bool operator==(const GameParams&, const GameParams&) = default;
};

void validate(const GameParams& g);

// One-shot hero-vs-villain game for a decision state. Multiway states use
// the effective (field) equity.
PayoffMatrix payoff_matrix(const DecisionState& x, const GameParams& g);

// Hero expected payoff of each row against a villain mix.
std::array<double, kNumActions> row_values(const PayoffMatrix& m,
                                           const VillainDistribution& villain);
// Hero expected payoff of each villain column against a hero mix.
std::array<double, kNumVillainActions> column_values(
    const PayoffMatrix& m, const ActionDistribution& hero);
// What `hero` guarantees against a best-responding villain.
double guaranteed_value(const PayoffMatrix& m, const ActionDistribution& hero);
// What a best-responding hero earns against `villain`.
double best_response_value(const PayoffMatrix& m,
                           const VillainDistribution& villain);

struct Equilibrium {
  ActionDistribution hero;
  VillainDistribution villain{};
  double value = 0.0;
  // False when more than one hero strategy attains the value.
  bool hero_unique = true;
};

// Exact minimax solution by enumerating supports of size one and two. A 3x2
// game always admits an optimal hero strategy with at most two rows.
Equilibrium solve_equilibrium_bruteforce(const PayoffMatrix& m);

// Draws a villain column from `villain` and returns the hero payoff for `a`.
double sample_villain_payoff(const DecisionState& x, Action a,
                             const GameParams& g,
                             const VillainDistribution& villain, Rng& rng);

// `street,equity,texture,players,call_passive,call_aggressive,
// raise_passive,raise_aggressive,fold_passive,fold_aggressive` per state.
void write_matrices_csv(std::ostream& out,
                        const std::vector<DecisionState>& states,
                        const GameParams& g);

}  // namespace gtobench

#endif  // GTOBENCH_GAME_HPP
