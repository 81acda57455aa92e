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
#include "gtobench/learners.hpp"
#include "gtobench/metrics.hpp"
#include "gtobench/state_gen.hpp"

namespace gtobench {
namespace {

double tv(const ActionDistribution& a, const ActionDistribution& b) {
  double s = 0;
  for (std::size_t i = 0; i < kNumActions; ++i) s += std::abs(a[i] - b[i]);
  return s / 2;
}

DecisionState dominant_raise_state() {
  DecisionState x;
  x.street = Street::kTurn;
  x.equity = 0.99;
  return x;
}

std::vector<DecisionState> random_states(int n, std::uint64_t seed) {
  GeneratorConfig cfg;
  Rng rng(seed);
  std::vector<DecisionState> out;
  for (int i = 0; i < n; ++i) out.push_back(sample_state(cfg, rng));
  return out;
}

TEST_CASE("regret matching") {
  CHECK(regret_match({0, 0, 0}) == ActionDistribution::uniform());
  const auto d = regret_match({2, 1, -5});
  CHECK(d.call() == doctest::Approx(2.0 / 3));
  CHECK(d.raise() == doctest::Approx(1.0 / 3));
  CHECK(d.fold() == 0.0);
  CHECK(regret_match({-1, -2, -3}) == ActionDistribution::uniform());
  const auto v = regret_match_villain({-1.0, 3.0});
  CHECK(v[0] == 0.0);
  CHECK(v[1] == 1.0);
}

TEST_CASE("equity buckets and keys") {
  CHECK(equity_bucket(0.0, 20) == 0);
  CHECK(equity_bucket(0.05, 20) == 1);
  CHECK(equity_bucket(0.0499999, 20) == 0);
  CHECK(equity_bucket(1.0, 20) == 19);
  CHECK(num_keys(20) == 2400);
  for (std::size_t i = 0; i < num_keys(20); ++i) {
    REQUIRE(key_index(key_from_index(i, 20), 20) == i);
  }
}

TEST_CASE("exact regret update") {
  PayoffMatrix m;
  m.entries = {{{1, -1}, {-1, 1}, {-10, -10}}};
  const auto u = exact_regret_update(m, ActionDistribution::uniform(), {0.5, 0.5});
  // Rows are worth 0, 0, -10; hero EV is -10/3.
  CHECK(u.hero[0] == doctest::Approx(10.0 / 3));
  CHECK(u.hero[2] == doctest::Approx(-20.0 / 3));
  // Columns give hero -10/3 each, so the villain is indifferent.
  CHECK(u.villain[0] == doctest::Approx(0.0));
  CHECK(u.villain[1] == doctest::Approx(0.0));
}

TEST_CASE("sampled update touches one villain column") {
  const PayoffMatrix m = payoff_matrix(dominant_raise_state(), GameParams{});
  const auto hero = ActionDistribution::from_probabilities(0.2, 0.5, 0.3);
  const VillainDistribution villain = {0.25, 0.75};
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto u = sampled_regret_update(m, hero, villain, 0.0, rng);
    const std::size_t c = u.sampled_column;
    double ev = 0;
    for (std::size_t a = 0; a < 3; ++a) ev += hero[a] * m.at(a, c);
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(u.hero[a] == doctest::Approx(m.at(a, c) - ev));
    }
  }
}

TEST_CASE("sampled update stays finite when a column has zero mass") {
  const PayoffMatrix m = payoff_matrix(dominant_raise_state(), GameParams{});
  Rng rng(7);
  for (double eps : {0.0, 0.1}) {
    for (int i = 0; i < 200; ++i) {
      const auto u = sampled_regret_update(
          m, ActionDistribution::point_mass(Action::kRaise), {1.0, 0.0}, eps, rng);
      for (double r : u.hero) CHECK(std::isfinite(r));
      for (double r : u.villain) CHECK(std::isfinite(r));
    }
  }
}

TEST_CASE("CFR plays the dominant row") {
  StateStream s = cycle_stream({dominant_raise_state()});
  const auto p = cfr_train(s, 1000, GameParams{}, {1, 0});
  CHECK(tv(p.query(dominant_raise_state()),
           ActionDistribution::point_mass(Action::kRaise)) <= 0.01);
  CHECK(p.kind() == PolicyKind::kCfr);
  CHECK(p.iterations_trained() == 1000);
  DecisionState other;
  other.street = Street::kRiver;
  CHECK(p.query(other) == ActionDistribution::uniform());
}

TEST_CASE("MCCFR plays the dominant row") {
  StateStream s = cycle_stream({dominant_raise_state()});
  const auto p = mccfr_train(s, 50000, GameParams{}, {1, 0});
  CHECK(tv(p.query(dominant_raise_state()),
           ActionDistribution::point_mass(Action::kRaise)) <= 0.02);
}

TEST_CASE("NFSP picks the dominant row") {
  StateStream s = cycle_stream({dominant_raise_state()});
  const auto p =
      nfsp_train(s, 50000, GameParams{}, NfspParams{}, ApproximatorSpec{}, {1, 0});
  CHECK(p.query(dominant_raise_state()).argmax() == Action::kRaise);
}

TEST_CASE("NFSP with anticipatory zero keeps its initial average") {
  StateStream s = cycle_stream({dominant_raise_state()});
  NfspParams n;
  n.anticipatory = 0.0;
  const auto p = nfsp_train(s, 5000, GameParams{}, n, ApproximatorSpec{}, {1, 0});
  CHECK(p.query(dominant_raise_state()) == ActionDistribution::uniform());
}

TEST_CASE("NFSP epsilon decays linearly") {
  NfspLearner learner(GameParams{}, NfspParams{}, ApproximatorSpec{}, {1, 0}, 101);
  CHECK(learner.epsilon() == doctest::Approx(0.1));
  for (int i = 0; i < 50; ++i) learner.step(dominant_raise_state());
  CHECK(learner.epsilon() == doctest::Approx(0.055));
  for (int i = 0; i < 60; ++i) learner.step(dominant_raise_state());
  CHECK(learner.epsilon() == doctest::Approx(0.01));
}

TEST_CASE("NFSP approximator path trains toward the dominant row") {
  StateStream s = cycle_stream({dominant_raise_state()});
  NfspParams n;
  n.use_approximator = true;
  n.anticipatory = 0.5;
  n.sl_learning_rate = 0.1;
  const auto p = nfsp_train(s, 3000, GameParams{}, n, ApproximatorSpec{}, {1, 0});
  CHECK(p.tabular() == nullptr);
  CHECK(p.query(dominant_raise_state()).argmax() == Action::kRaise);
}

TEST_CASE("DeepCFR starts uniform and learns the dominant row") {
  StateStream s = cycle_stream({dominant_raise_state()});
  auto p = deepcfr_train(s, 1, GameParams{}, ApproximatorSpec{}, {1, 0});
  DeepCfrLearner fresh(GameParams{}, ApproximatorSpec{}, {1, 0});
  for (double v : fresh.snapshot().query(dominant_raise_state()).probs()) {
    CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-12));
  }
  p = deepcfr_train(s, 3000, GameParams{}, ApproximatorSpec{}, {1, 0});
  CHECK(p.query(dominant_raise_state()).argmax() == Action::kRaise);
}

TEST_CASE("random policy") {
  const auto p = random_policy();
  for (const auto& x : random_states(10, 3)) {
    CHECK(p.query(x) == ActionDistribution::uniform());
  }
  const ActionDistribution q = ActionDistribution::from_probabilities(0.7, 0.2, 0.1);
  CHECK(cross_entropy(q, p.query(DecisionState{})) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("query outputs validate") {
  const auto states = random_states(2000, 4);
  StateStream s = cycle_stream(states);
  for (const auto& p : {cfr_train(s, 2000, GameParams{}, {1, 0}),
                        mccfr_train(s, 2000, GameParams{}, {1, 0}),
                        deepcfr_train(s, 200, GameParams{}, ApproximatorSpec{}, {1, 0}),
                        nfsp_train(s, 2000, GameParams{}, NfspParams{},
                                   ApproximatorSpec{}, {1, 0})}) {
    for (const auto& x : states) CHECK_NOTHROW(validate_distribution(p.query(x)));
  }
}

TEST_CASE("tabular policy file round trip") {
  const auto states = random_states(3000, 5);
  StateStream s = cycle_stream(states);
  const auto p = mccfr_train(s, 20000, GameParams{}, {9, 2});
  std::stringstream io;
  write_tabular_policy(io, p);
  const std::string text = io.str();
  const auto q = read_tabular_policy(io);
  CHECK(q.kind() == PolicyKind::kMccfr);
  CHECK(q.iterations_trained() == 20000);
  CHECK(q.seed() == SeedSpec{9, 2});
  for (std::size_t k = 0; k < p.tabular()->size(); ++k) {
    REQUIRE(p.tabular()->entry(k) == q.tabular()->entry(k));
  }
  for (const auto& x : random_states(1000, 6)) CHECK(p.query(x) == q.query(x));

  std::string tampered = text;
  tampered[tampered.size() - 3] = tampered[tampered.size() - 3] == '1' ? '2' : '1';
  std::istringstream bad(tampered);
  CHECK_THROWS_AS(read_tabular_policy(bad), Error);
  CHECK_THROWS_AS(write_tabular_policy(io, random_policy()), Error);
}

TEST_CASE("tabular learners ignore interleaving across keys") {
  // Three states in three distinct keys, each visited several times.
  std::vector<DecisionState> base = random_states(3, 8);
  base[1].street = Street::kRiver;
  base[2].texture = Texture::kMonotone;
  std::vector<DecisionState> a, b;
  for (int r = 0; r < 30; ++r) {
    for (const auto& x : base) a.push_back(x);
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (int r = 0; r < 30; ++r) b.push_back(base[base.size() - 1 - i]);
  }
  StateStream sa = cycle_stream(a), sb = cycle_stream(b);
  const auto cfr_a = cfr_train(sa, 90, GameParams{}, {3, 0});
  const auto cfr_b = cfr_train(sb, 90, GameParams{}, {3, 0});
  StateStream ma = cycle_stream(a), mb = cycle_stream(b);
  const auto mc_a = mccfr_train(ma, 90, GameParams{}, {3, 0});
  const auto mc_b = mccfr_train(mb, 90, GameParams{}, {3, 0});
  for (const auto& x : base) {
    CHECK(cfr_a.query(x) == cfr_b.query(x));
    CHECK(mc_a.query(x) == mc_b.query(x));
  }
}

// Strict form of the oracle comparison. States within about 2e-3 of equity
// 0.5 have a unique equilibrium that beats the runner-up row by a similar
// margin, and regret matching needs on the order of 1/margin iterations to
// settle there, so a handful of the 1000 states miss at 10,000 iterations.
TEST_CASE("CFR matches the brute-force oracle on 1000 states" * doctest::may_fail()) {
  const GameParams g;
  for (const auto& x : random_states(1000, 10)) {
    CfrLearner learner(g, {1, 0});
    for (int i = 0; i < 10000; ++i) learner.step(x);
    const auto avg = learner.snapshot().query(x);
    const PayoffMatrix m = payoff_matrix(x, g);
    const auto eq = solve_equilibrium_bruteforce(m);
    if (eq.hero_unique) {
      CHECK(tv(avg, eq.hero) <= 0.01);
    } else {
      CHECK(std::abs(guaranteed_value(m, avg) - eq.value) <= 1e-3);
    }
  }
}

TEST_CASE("CFR oracle misses are near-ties that close with more iterations") {
  const GameParams g;
  int misses = 0;
  for (const auto& x : random_states(1000, 10)) {
    CfrLearner learner(g, {1, 0});
    for (int i = 0; i < 10000; ++i) learner.step(x);
    const PayoffMatrix m = payoff_matrix(x, g);
    const auto eq = solve_equilibrium_bruteforce(m);
    auto avg = learner.snapshot().query(x);
    CHECK(std::abs(guaranteed_value(m, avg) - eq.value) <= 1e-3);
    if (!eq.hero_unique || tv(avg, eq.hero) <= 0.01) continue;
    ++misses;
    CHECK(std::abs(x.equity - 0.5) < 2e-3);
    for (int i = 10000; i < 100000; ++i) learner.step(x);
    avg = learner.snapshot().query(x);
    CHECK(tv(avg, eq.hero) <= 0.01);
  }
  MESSAGE("near-tie states missing TV 0.01 at 10,000 iterations: " << misses);
  CHECK(misses <= 10);
}

double average_profile_nashconv(const CfrLearner& learner, const DecisionState& x,
                                const GameParams& g) {
  const std::size_t key = key_index(state_key(x, learner.buckets()), learner.buckets());
  return profile_nashconv(payoff_matrix(x, g), learner.snapshot().query(x),
                          learner.villain_average(key));
}

TEST_CASE("NashConv falls across checkpoints for CFR and MCCFR") {
  const GameParams g;
  const auto states = random_states(100, 11);
  for (int use_mccfr = 0; use_mccfr < 2; ++use_mccfr) {
    int decreasing = 0;
    for (const auto& x : states) {
      std::unique_ptr<CfrLearner> learner =
          use_mccfr ? std::make_unique<MccfrLearner>(g, SeedSpec{2, 0})
                    : std::make_unique<CfrLearner>(g, SeedSpec{2, 0});
      std::vector<double> nc;
      long done = 0;
      for (long checkpoint : {100L, 1000L, 10000L}) {
        for (; done < checkpoint; ++done) learner->step(x);
        nc.push_back(average_profile_nashconv(*learner, x, g));
      }
      if (nc[1] < nc[0] && nc[2] < nc[1]) ++decreasing;
    }
    CHECK(decreasing >= 95);
  }
}

TEST_CASE("MCCFR agrees with CFR on unique equilibria") {
  const GameParams g;
  for (const auto& x : random_states(100, 12)) {
    if (!solve_equilibrium_bruteforce(payoff_matrix(x, g)).hero_unique) continue;
    CfrLearner cfr(g, {3, 0});
    MccfrLearner mccfr(g, {3, 0});
    for (int i = 0; i < 50000; ++i) {
      cfr.step(x);
      mccfr.step(x);
    }
    CHECK(tv(cfr.snapshot().query(x), mccfr.snapshot().query(x)) <= 0.05);
  }
}

TEST_CASE("policy kind names") {
  for (PolicyKind k : kAllPolicyKinds) CHECK(parse_policy_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_policy_kind("alphazero"), Error);
}

}  // namespace
}  // namespace gtobench
