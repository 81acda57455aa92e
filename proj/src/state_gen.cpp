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

#include "gtobench/state_gen.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <string>

namespace gtobench {
namespace {

template <std::size_t N>
void check_weights(const std::array<double, N>& w, const char* name) {
  double sum = 0.0;
  for (double v : w) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kConfigError,
                  std::string(name) + " has a negative weight");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::kConfigError,
                std::string(name) + " sums to " + std::to_string(sum));
  }
}

}  // namespace

void validate(const GeneratorConfig& cfg) {
  check_weights(cfg.street_weights, "generator.street_weights");
  check_weights(cfg.player_count_weights, "generator.player_count_weights");
  for (double a : cfg.equity_alpha) {
    if (!(a > 0.0)) {
      throw Error(ErrorCode::kConfigError,
                  "generator.equity_alpha entries must be positive");
    }
  }
  if (cfg.monte_carlo_trials < 1) {
    throw Error(ErrorCode::kConfigError,
                "generator.monte_carlo_trials must be at least 1");
  }
}

std::array<double, kNumStreets> estimate_street_weights(const StreetCounts& c) {
  if (!(c.prior_alpha >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "prior_alpha must be >= 0");
  }
  double n_total = 0.0;
  for (auto n : c.counts) n_total += static_cast<double>(n);
  const double denom = n_total + 4.0 * c.prior_alpha;
  if (denom <= 0.0) {
    throw Error(ErrorCode::kDegenerateCounts,
                "no observations and no prior mass");
  }
  std::array<double, kNumStreets> f{};
  double f_sum = 0.0;
  for (std::size_t s = 0; s < kNumStreets; ++s) {
    f[s] = (static_cast<double>(c.counts[s]) + c.prior_alpha) / denom;
    f_sum += f[s];
  }
  for (double& v : f) v /= f_sum;
  return f;
}

Street sample_street(const GeneratorConfig& cfg, Rng& rng) {
  return static_cast<Street>(rng.categorical(cfg.street_weights));
}

double sample_equity(Street street, const GeneratorConfig& cfg, Rng& rng) {
  const double alpha = cfg.equity_alpha[static_cast<std::size_t>(street)];
  return rng.beta(alpha, alpha);
}

Texture sample_texture(Rng& rng) {
  return static_cast<Texture>(rng.uniform_int(kNumTextures));
}

int sample_player_count(const GeneratorConfig& cfg, Rng& rng) {
  if (cfg.headsup) {
    throw Error(ErrorCode::kHeadsUpMode,
                "player counts are fixed at 2 in heads-up mode");
  }
  return 3 + static_cast<int>(rng.categorical(cfg.player_count_weights));
}

double sample_showdown_equity(double pairwise, int players, int trials,
                              Rng& rng) {
  int wins = 0;
  for (int t = 0; t < trials; ++t) {
    bool won = true;
    for (int opp = 1; opp < players; ++opp) {
      if (rng.uniform() >= pairwise) {
        won = false;
        break;
      }
    }
    wins += won ? 1 : 0;
  }
  return static_cast<double>(wins) / trials;
}

DecisionState sample_state_with_players(const GeneratorConfig& cfg,
                                        int players, Rng& rng) {
  DecisionState x;
  x.street = sample_street(cfg, rng);
  x.equity = sample_equity(x.street, cfg, rng);
  x.texture = sample_texture(rng);
  x.players = players;
  if (players > 2 && cfg.multiway_equity == MultiwayEquityMode::kMonteCarlo) {
    x.equity = sample_showdown_equity(x.equity, players,
                                      cfg.monte_carlo_trials, rng);
    x.equity_kind = EquityKind::kShowdown;
  }
  return x;
}

DecisionState sample_state(const GeneratorConfig& cfg, Rng& rng) {
  if (cfg.headsup) return sample_state_with_players(cfg, 2, rng);
  const int players = sample_player_count(cfg, rng);
  return sample_state_with_players(cfg, players, rng);
}

StateStream generator_stream(GeneratorConfig cfg, Rng rng) {
  auto gen = std::make_shared<Rng>(rng);
  return [cfg, gen]() { return sample_state(cfg, *gen); };
}

StateStream cycle_stream(std::vector<DecisionState> states) {
  if (states.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cycle_stream needs states");
  }
  auto data = std::make_shared<std::vector<DecisionState>>(std::move(states));
  auto pos = std::make_shared<std::size_t>(0);
  return [data, pos]() {
    const DecisionState& x = (*data)[*pos];
    *pos = (*pos + 1) % data->size();
    return x;
  };
}

void write_states_csv(std::ostream& out,
                      const std::vector<DecisionState>& states) {
  out << "street,equity,texture,players\n";
  char buf[64];
  for (const auto& x : states) {
    std::snprintf(buf, sizeof buf, "%.10g", x.equity);
    out << to_string(x.street) << ',' << buf << ',' << to_string(x.texture)
        << ',' << x.players << '\n';
  }
}

}  // namespace gtobench
