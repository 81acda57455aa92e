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

#ifndef GTOBENCH_STATE_GEN_HPP
#define GTOBENCH_STATE_GEN_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "gtobench/rng.hpp"
#include "gtobench/types.hpp"

namespace gtobench {

// How multiway equity is produced. kTransform keeps the drawn pairwise
// equity and lets consumers apply e^(k-1); kMonteCarlo replaces it with a
// simulated probability of beating k-1 independent opponents.
enum class MultiwayEquityMode { kTransform, kMonteCarlo };

struct GeneratorConfig {
  std::array<double, kNumStreets> street_weights = {0.4, 0.3, 0.2, 0.1};
  // Beta(alpha, alpha) shape per street.
  std::array<double, kNumStreets> equity_alpha = {8.0, 6.0, 4.0, 3.0};
  // Weights over k = 3, 4, 5, 6.
  std::array<double, 4> player_count_weights = {0.45, 0.30, 0.15, 0.10};
  bool headsup = true;
  MultiwayEquityMode multiway_equity = MultiwayEquityMode::kTransform;
  int monte_carlo_trials = 1000;

  friend bool operator==(const GeneratorConfig&,
                         const GeneratorConfig&) = default;
};

// Throws kConfigError on weights that do not sum to one or non-positive
// shapes.
void validate(const GeneratorConfig& cfg);

struct StreetCounts {
  std::array<std::uint64_t, kNumStreets> counts{};
  double prior_alpha = 1.0;
};

// Dirichlet-smoothed street incidences (n_s + a) / (N + 4a), renormalized.
std::array<double, kNumStreets> estimate_street_weights(const StreetCounts& c);

Street sample_street(const GeneratorConfig& cfg, Rng& rng);
double sample_equity(Street street, const GeneratorConfig& cfg, Rng& rng);
Texture sample_texture(Rng& rng);
int sample_player_count(const GeneratorConfig& cfg, Rng& rng);
// Fraction of `trials` simulated showdowns in which hero beats each of the
// k-1 opponents independently with probability `pairwise`.
double sample_showdown_equity(double pairwise, int players, int trials,
                              Rng& rng);
DecisionState sample_state(const GeneratorConfig& cfg, Rng& rng);
// Multiway state with the player count pinned to `players`.
DecisionState sample_state_with_players(const GeneratorConfig& cfg,
                                        int players, Rng& rng);

using StateStream = std::function<DecisionState()>;

// Endless stream drawing from `cfg`; owns its generator.
StateStream generator_stream(GeneratorConfig cfg, Rng rng);
// Cycles through `states` in order.
StateStream cycle_stream(std::vector<DecisionState> states);

// `street,equity,texture,players` rows with a header line.
void write_states_csv(std::ostream& out,
                      const std::vector<DecisionState>& states);

}  // namespace gtobench

#endif  // GTOBENCH_STATE_GEN_HPP
