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

#ifndef GTOBENCH_LEARNERS_HPP
#define GTOBENCH_LEARNERS_HPP

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "gtobench/approximator.hpp"
#include "gtobench/game.hpp"
#include "gtobench/rng.hpp"
#include "gtobench/state_gen.hpp"
#include "gtobench/types.hpp"

namespace gtobench {

enum class PolicyKind : std::uint8_t { kCfr = 0, kMccfr, kDeepCfr, kNfsp, kRandom };
inline constexpr std::array<PolicyKind, 5> kAllPolicyKinds = {
    PolicyKind::kCfr, PolicyKind::kMccfr, PolicyKind::kDeepCfr,
    PolicyKind::kNfsp, PolicyKind::kRandom};

std::string_view to_string(PolicyKind k);
PolicyKind parse_policy_kind(std::string_view text);

// ---------------------------------------------------------------------------
// Abstraction

inline constexpr int kDefaultEquityBuckets = 20;

struct StateKey {
  Street street = Street::kPre;
  int equity_bucket = 0;
  Texture texture = Texture::kDry;
  int players = 2;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

// Bucket i covers [i/B, (i+1)/B); equity 1 lands in the last bucket.
int equity_bucket(double equity, int buckets);
StateKey state_key(const DecisionState& x, int buckets);
std::size_t num_keys(int buckets);
std::size_t key_index(const StateKey& key, int buckets);
StateKey key_from_index(std::size_t index, int buckets);

// ---------------------------------------------------------------------------
// Regret matching

struct RegretEntry {
  std::array<double, kNumActions> cum_regret{};
  std::array<double, kNumActions> cum_strategy{};
  std::uint64_t visits = 0;
};

struct VillainEntry {
  std::array<double, kNumVillainActions> cum_regret{};
  std::array<double, kNumVillainActions> cum_strategy{};
};

// Positive parts normalized; uniform when no regret is positive.
ActionDistribution regret_match(const std::array<double, kNumActions>& cum_regret);
VillainDistribution regret_match_villain(
    const std::array<double, kNumVillainActions>& cum_regret);

struct RegretUpdate {
  std::array<double, kNumActions> hero{};
  std::array<double, kNumVillainActions> villain{};
  // Set by the sampled update only.
  std::size_t sampled_column = 0;
  std::size_t sampled_row = 0;
};

// Exact counterfactual regrets of both players under the current profile.
RegretUpdate exact_regret_update(const PayoffMatrix& m,
                                 const ActionDistribution& hero,
                                 const VillainDistribution& villain);

// Outcome-sampled estimate of exact_regret_update. The hero's values come
// from one villain column drawn from (1 - exploration) * villain + uniform
// mass, importance-weighted by villain(col) / q(col); the villain's values
// come from one hero row drawn the same way. Unbiased for any exploration
// that keeps q positive on the support.
RegretUpdate sampled_regret_update(const PayoffMatrix& m,
                                   const ActionDistribution& hero,
                                   const VillainDistribution& villain,
                                   double exploration, Rng& rng);

// ---------------------------------------------------------------------------
// Trained policies

class PolicyModel {
 public:
  virtual ~PolicyModel() = default;
  virtual ActionDistribution query(const DecisionState& x) const = 0;
};

// Average strategies per key; unvisited keys answer uniform.
class TabularPolicy final : public PolicyModel {
 public:
  TabularPolicy(int buckets, std::vector<std::optional<ActionDistribution>> table);

  ActionDistribution query(const DecisionState& x) const override;
  const std::optional<ActionDistribution>& entry(std::size_t key) const {
    return table_[key];
  }
  int buckets() const { return buckets_; }
  std::size_t size() const { return table_.size(); }

 private:
  int buckets_;
  std::vector<std::optional<ActionDistribution>> table_;
};

class TrainedPolicy {
 public:
  TrainedPolicy(PolicyKind kind, std::shared_ptr<const PolicyModel> model,
                long iterations, SeedSpec seed);

  ActionDistribution query(const DecisionState& x) const {
    return model_->query(x);
  }
  PolicyKind kind() const { return kind_; }
  long iterations_trained() const { return iterations_; }
  const SeedSpec& seed() const { return seed_; }
  // Null for non-tabular policies.
  const TabularPolicy* tabular() const {
    return dynamic_cast<const TabularPolicy*>(model_.get());
  }

 private:
  PolicyKind kind_;
  std::shared_ptr<const PolicyModel> model_;
  long iterations_;
  SeedSpec seed_;
};

// ---------------------------------------------------------------------------
// Learners

struct LearnerOptions {
  int equity_buckets = kDefaultEquityBuckets;
  // Uniform mixing into MCCFR's sampling distributions.
  double mccfr_exploration = 0.0;
  friend bool operator==(const LearnerOptions&, const LearnerOptions&) = default;
};

struct NfspParams {
  double anticipatory = 0.1;
  double rl_learning_rate = 0.05;
  double sl_learning_rate = 0.01;
  double epsilon_start = 0.1;
  double epsilon_end = 0.01;
  // Average policy as a network trained on a reservoir instead of counts.
  bool use_approximator = false;
  friend bool operator==(const NfspParams&, const NfspParams&) = default;
};

void validate(const LearnerOptions& o);
void validate(const NfspParams& n);

class Learner {
 public:
  virtual ~Learner() = default;
  virtual void step(const DecisionState& x) = 0;
  virtual TrainedPolicy snapshot() const = 0;
  long iterations() const { return iterations_; }
  void train(StateStream& states, long iters);

 protected:
  long iterations_ = 0;
};

// Hero and villain regret matching per key with full-expectation updates.
class CfrLearner : public Learner {
 public:
  CfrLearner(const GameParams& g, SeedSpec seed, const LearnerOptions& opts = {});
  void step(const DecisionState& x) override;
  TrainedPolicy snapshot() const override;

  const RegretEntry& hero_entry(std::size_t key) const { return hero_[key]; }
  VillainDistribution villain_average(std::size_t key) const;
  int buckets() const { return opts_.equity_buckets; }

 protected:
  CfrLearner(PolicyKind kind, const GameParams& g, SeedSpec seed,
             const LearnerOptions& opts);
  TrainedPolicy tabular_snapshot() const;

  PolicyKind kind_;
  GameParams game_;
  SeedSpec seed_;
  LearnerOptions opts_;
  std::vector<RegretEntry> hero_;
  std::vector<VillainEntry> villain_;
};

// Outcome-sampling variant. Each key owns an RNG sub-stream, so results do
// not depend on how visits to different keys interleave.
class MccfrLearner final : public CfrLearner {
 public:
  MccfrLearner(const GameParams& g, SeedSpec seed, const LearnerOptions& opts = {});
  void step(const DecisionState& x) override;
  TrainedPolicy snapshot() const override;

 private:
  std::vector<Rng> key_rngs_;
};

class DeepCfrLearner final : public Learner {
 public:
  DeepCfrLearner(const GameParams& g, const ApproximatorSpec& spec,
                 SeedSpec seed, const LearnerOptions& opts = {});
  void step(const DecisionState& x) override;
  TrainedPolicy snapshot() const override;

  const Mlp& regret_net() const { return regret_net_; }
  const Mlp& policy_net() const { return policy_net_; }

 private:
  GameParams game_;
  ApproximatorSpec spec_;
  SeedSpec seed_;
  LearnerOptions opts_;
  Rng rng_;
  Mlp regret_net_;
  Mlp policy_net_;
  ReservoirBuffer regret_buffer_;
  ReservoirBuffer policy_buffer_;
  std::vector<VillainEntry> villain_;
  std::vector<double> batch_in_, batch_target_, grad_;
};

class NfspLearner final : public Learner {
 public:
  // `planned_iters` sets the length of the linear epsilon schedule.
  NfspLearner(const GameParams& g, const NfspParams& params,
              const ApproximatorSpec& spec, SeedSpec seed, long planned_iters,
              const LearnerOptions& opts = {});
  void step(const DecisionState& x) override;
  TrainedPolicy snapshot() const override;

  double epsilon() const;

 private:
  struct Side {
    std::vector<double> q;       // keys x actions
    std::vector<double> counts;  // keys x actions
  };
  std::size_t pick(const Side& side, std::size_t key, std::size_t actions,
                   bool best_response);
  std::size_t average_action(const Side& side, std::size_t key,
                             std::size_t actions);

  GameParams game_;
  NfspParams params_;
  ApproximatorSpec spec_;
  SeedSpec seed_;
  long planned_iters_;
  LearnerOptions opts_;
  Rng rng_;
  Side hero_;
  Side villain_;
  std::optional<Mlp> avg_net_;
  std::optional<ReservoirBuffer> sl_buffer_;
  std::vector<double> batch_in_, batch_target_, grad_;
};

TrainedPolicy cfr_train(StateStream& states, long iters, const GameParams& g,
                        SeedSpec seed, const LearnerOptions& opts = {});
TrainedPolicy mccfr_train(StateStream& states, long iters, const GameParams& g,
                          SeedSpec seed, const LearnerOptions& opts = {});
TrainedPolicy deepcfr_train(StateStream& states, long iters,
                            const GameParams& g, const ApproximatorSpec& spec,
                            SeedSpec seed, const LearnerOptions& opts = {});
TrainedPolicy nfsp_train(StateStream& states, long iters, const GameParams& g,
                         const NfspParams& n, const ApproximatorSpec& spec,
                         SeedSpec seed, const LearnerOptions& opts = {});
TrainedPolicy random_policy();

// ---------------------------------------------------------------------------
// Tabular policy files

// Versioned CSV: a header naming the kind, bucket count and body hash, then
// one `key,street,bucket,texture,players,call,raise,fold` row per visited
// key. Probabilities are written with 17 significant digits so a reload
// reproduces every query bit for bit.
void write_tabular_policy(std::ostream& out, const TrainedPolicy& policy);
TrainedPolicy read_tabular_policy(std::istream& in);

}  // namespace gtobench

#endif  // GTOBENCH_LEARNERS_HPP
