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

#include "gtobench/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <limits>
#include <vector>

#include "gtobench/proxy.hpp"

namespace gtobench {
namespace {

constexpr double kFeasibilityTol = 1e-10;
constexpr double kSameStrategyTol = 1e-9;

using HeroMix = std::array<double, kNumActions>;

double mix_value(const PayoffMatrix& m, const HeroMix& x, std::size_t col) {
  double v = 0.0;
  for (std::size_t r = 0; r < kNumActions; ++r) v += x[r] * m.at(r, col);
  return v;
}

double mix_guarantee(const PayoffMatrix& m, const HeroMix& x) {
  return std::min(mix_value(m, x, 0), mix_value(m, x, 1));
}

HeroMix edge_mix(std::size_t i, std::size_t k, double p) {
  HeroMix x{};
  x[i] = p;
  x[k] = 1.0 - p;
  return x;
}

constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kRowPairs = {
    {{0, 1}, {0, 2}, {1, 2}}};

// Vertices of {x in simplex : x.M_j >= v for both columns}.
std::vector<HeroMix> optimal_vertices(const PayoffMatrix& m, double v) {
  std::vector<HeroMix> out;
  auto consider = [&](const HeroMix& x) {
    for (double xi : x) {
      if (xi < -kFeasibilityTol) return;
    }
    if (mix_guarantee(m, x) >= v - kFeasibilityTol) out.push_back(x);
  };
  for (std::size_t r = 0; r < kNumActions; ++r) {
    consider(edge_mix(r, (r + 1) % kNumActions, 1.0));
  }
  for (auto [i, k] : kRowPairs) {
    for (std::size_t j = 0; j < kNumVillainActions; ++j) {
      const double denom = m.at(i, j) - m.at(k, j);
      if (denom == 0.0) continue;
      const double p = (v - m.at(k, j)) / denom;
      if (p >= -kFeasibilityTol && p <= 1.0 + kFeasibilityTol) {
        consider(edge_mix(i, k, std::clamp(p, 0.0, 1.0)));
      }
    }
  }
  // Interior point where both column constraints bind: solve
  // x.(M_0 - M_1) = 0, x.M_1 = v, sum x = 1 by Cramer's rule.
  const std::array<std::array<double, 3>, 3> a = {{
      {m.at(0, 0) - m.at(0, 1), m.at(1, 0) - m.at(1, 1), m.at(2, 0) - m.at(2, 1)},
      {m.at(0, 1), m.at(1, 1), m.at(2, 1)},
      {1.0, 1.0, 1.0},
  }};
  const std::array<double, 3> rhs = {0.0, v, 1.0};
  auto det3 = [](const std::array<std::array<double, 3>, 3>& q) {
    return q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
           q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
           q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
  };
  const double det = det3(a);
  if (std::abs(det) > 1e-12) {
    HeroMix x{};
    for (std::size_t c = 0; c < 3; ++c) {
      auto q = a;
      for (std::size_t r = 0; r < 3; ++r) q[r][c] = rhs[r];
      x[c] = det3(q) / det;
    }
    consider(x);
  }
  return out;
}

}  // namespace

void validate(const GameParams& g) {
  for (double b : g.bet_by_street) {
    if (!(b > 0.0)) {
      throw Error(ErrorCode::kConfigError, "game.bet_by_street must be > 0");
    }
  }
  if (!(g.fold_equity >= 0.0 && g.fold_equity <= 1.0)) {
    throw Error(ErrorCode::kConfigError, "game.fold_equity must be in [0,1]");
  }
  if (!std::isfinite(g.fold_cost)) {
    throw Error(ErrorCode::kConfigError, "game.fold_cost must be finite");
  }
  for (double mult : g.texture_fold_equity_adjust) {
    if (!(mult >= 0.0) || g.fold_equity * mult > 1.0) {
      throw Error(ErrorCode::kConfigError,
                  "game.texture_fold_equity_adjust keeps fold equity in [0,1]");
    }
  }
}

PayoffMatrix payoff_matrix(const DecisionState& x, const GameParams& g) {
  validate_state(x);
  const double e = effective_equity(x);
  const double b = g.bet_by_street[static_cast<std::size_t>(x.street)];
  const double fe = std::clamp(
      g.fold_equity *
          g.texture_fold_equity_adjust[static_cast<std::size_t>(x.texture)],
      0.0, 1.0);
  const double edge = 2.0 * e - 1.0;
  PayoffMatrix m;
  m.entries[0] = {edge, edge * (1.0 + b)};
  m.entries[1] = {fe + (1.0 - fe) * edge * (1.0 + b), edge * (1.0 + 2.0 * b)};
  m.entries[2] = {-g.fold_cost, -g.fold_cost};
  return m;
}

std::array<double, kNumActions> row_values(const PayoffMatrix& m,
                                           const VillainDistribution& villain) {
  std::array<double, kNumActions> out{};
  for (std::size_t r = 0; r < kNumActions; ++r) {
    out[r] = villain[0] * m.at(r, 0) + villain[1] * m.at(r, 1);
  }
  return out;
}

std::array<double, kNumVillainActions> column_values(
    const PayoffMatrix& m, const ActionDistribution& hero) {
  return {mix_value(m, hero.probs(), 0), mix_value(m, hero.probs(), 1)};
}

double guaranteed_value(const PayoffMatrix& m, const ActionDistribution& hero) {
  return mix_guarantee(m, hero.probs());
}

double best_response_value(const PayoffMatrix& m,
                           const VillainDistribution& villain) {
  const auto v = row_values(m, villain);
  return *std::max_element(v.begin(), v.end());
}

Equilibrium solve_equilibrium_bruteforce(const PayoffMatrix& m) {
  // Hero: pure rows, then the column-equalizing mix of each row pair.
  HeroMix best{};
  double best_value = -std::numeric_limits<double>::infinity();
  auto offer = [&](const HeroMix& x) {
    const double v = mix_guarantee(m, x);
    if (v > best_value) {
      best_value = v;
      best = x;
    }
  };
  for (std::size_t r = 0; r < kNumActions; ++r) {
    HeroMix x{};
    x[r] = 1.0;
    offer(x);
  }
  for (auto [i, k] : kRowPairs) {
    const double di = m.at(i, 0) - m.at(i, 1);
    const double dk = m.at(k, 0) - m.at(k, 1);
    if (di == dk) continue;
    const double p = dk / (dk - di);
    if (p > 0.0 && p < 1.0) offer(edge_mix(i, k, p));
  }

  // Villain: minimize the upper envelope of the three row lines over the
  // passive probability t.
  double best_t = 0.0;
  double best_upper = std::numeric_limits<double>::infinity();
  auto upper = [&](double t) {
    double u = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < kNumActions; ++r) {
      u = std::max(u, t * m.at(r, 0) + (1.0 - t) * m.at(r, 1));
    }
    return u;
  };
  auto offer_t = [&](double t) {
    const double u = upper(t);
    if (u < best_upper) {
      best_upper = u;
      best_t = t;
    }
  };
  offer_t(1.0);
  offer_t(0.0);
  for (auto [i, k] : kRowPairs) {
    const double di = m.at(i, 0) - m.at(i, 1);
    const double dk = m.at(k, 0) - m.at(k, 1);
    if (di == dk) continue;
    const double t = (m.at(k, 1) - m.at(i, 1)) / (di - dk);
    if (t > 0.0 && t < 1.0) offer_t(t);
  }

  Equilibrium eq;
  eq.hero = ActionDistribution::from_weights(best);
  eq.villain = {best_t, 1.0 - best_t};
  eq.value = best_value;
  const auto vertices = optimal_vertices(m, best_value);
  for (const auto& vtx : vertices) {
    for (std::size_t r = 0; r < kNumActions; ++r) {
      if (std::abs(vtx[r] - best[r]) > kSameStrategyTol) eq.hero_unique = false;
    }
  }
  return eq;
}

double sample_villain_payoff(const DecisionState& x, Action a,
                             const GameParams& g,
                             const VillainDistribution& villain, Rng& rng) {
  const PayoffMatrix m = payoff_matrix(x, g);
  const std::size_t col = rng.categorical(villain);
  return m.at(static_cast<std::size_t>(a), col);
}

void write_matrices_csv(std::ostream& out,
                        const std::vector<DecisionState>& states,
                        const GameParams& g) {
  out << "street,equity,texture,players,call_passive,call_aggressive,"
         "raise_passive,raise_aggressive,fold_passive,fold_aggressive\n";
  char buf[64];
  for (const auto& x : states) {
    const PayoffMatrix m = payoff_matrix(x, g);
    std::snprintf(buf, sizeof buf, "%.10g", x.equity);
    out << to_string(x.street) << ',' << buf << ',' << to_string(x.texture)
        << ',' << x.players;
    for (const auto& row : m.entries) {
      for (double v : row) {
        std::snprintf(buf, sizeof buf, "%.10g", v);
        out << ',' << buf;
      }
    }
    out << '\n';
  }
}

}  // namespace gtobench
