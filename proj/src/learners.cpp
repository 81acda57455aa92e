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

#include "gtobench/learners.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gtobench/proxy.hpp"

namespace gtobench {

std::string_view to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::kCfr: return "cfr";
    case PolicyKind::kMccfr: return "mccfr";
    case PolicyKind::kDeepCfr: return "deepcfr";
    case PolicyKind::kNfsp: return "nfsp";
    case PolicyKind::kRandom: return "random";
  }
  return "?";
}

PolicyKind parse_policy_kind(std::string_view text) {
  for (PolicyKind k : kAllPolicyKinds) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown model '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Abstraction

int equity_bucket(double equity, int buckets) {
  if (buckets < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bucket count must be positive");
  }
  const int b = static_cast<int>(std::floor(equity * buckets));
  return std::clamp(b, 0, buckets - 1);
}

StateKey state_key(const DecisionState& x, int buckets) {
  return {x.street, equity_bucket(x.equity, buckets), x.texture, x.players};
}

std::size_t num_keys(int buckets) {
  return kNumStreets * static_cast<std::size_t>(buckets) * kNumTextures *
         (kMaxPlayers - kMinPlayers + 1);
}

std::size_t key_index(const StateKey& key, int buckets) {
  std::size_t idx = static_cast<std::size_t>(key.street);
  idx = idx * buckets + key.equity_bucket;
  idx = idx * kNumTextures + static_cast<std::size_t>(key.texture);
  idx = idx * (kMaxPlayers - kMinPlayers + 1) + (key.players - kMinPlayers);
  return idx;
}

StateKey key_from_index(std::size_t index, int buckets) {
  StateKey key;
  constexpr std::size_t kPlayerSpan = kMaxPlayers - kMinPlayers + 1;
  key.players = static_cast<int>(index % kPlayerSpan) + kMinPlayers;
  index /= kPlayerSpan;
  key.texture = static_cast<Texture>(index % kNumTextures);
  index /= kNumTextures;
  key.equity_bucket = static_cast<int>(index % buckets);
  index /= buckets;
  key.street = static_cast<Street>(index);
  return key;
}

// ---------------------------------------------------------------------------
// Regret matching

ActionDistribution regret_match(
    const std::array<double, kNumActions>& cum_regret) {
  std::array<double, kNumActions> pos{};
  for (std::size_t a = 0; a < kNumActions; ++a) {
    pos[a] = std::max(0.0, cum_regret[a]);
  }
  return ActionDistribution::from_weights(pos);
}

VillainDistribution regret_match_villain(
    const std::array<double, kNumVillainActions>& cum_regret) {
  const double p = std::max(0.0, cum_regret[0]);
  const double a = std::max(0.0, cum_regret[1]);
  if (p + a <= 0.0) return {0.5, 0.5};
  return {p / (p + a), a / (p + a)};
}

RegretUpdate exact_regret_update(const PayoffMatrix& m,
                                 const ActionDistribution& hero,
                                 const VillainDistribution& villain) {
  RegretUpdate u;
  const auto rows = row_values(m, villain);
  double hero_ev = 0.0;
  for (std::size_t a = 0; a < kNumActions; ++a) hero_ev += hero[a] * rows[a];
  for (std::size_t a = 0; a < kNumActions; ++a) u.hero[a] = rows[a] - hero_ev;

  const auto cols = column_values(m, hero);
  const double villain_ev = -(villain[0] * cols[0] + villain[1] * cols[1]);
  for (std::size_t c = 0; c < kNumVillainActions; ++c) {
    u.villain[c] = -cols[c] - villain_ev;
  }
  return u;
}

RegretUpdate sampled_regret_update(const PayoffMatrix& m,
                                   const ActionDistribution& hero,
                                   const VillainDistribution& villain,
                                   double exploration, Rng& rng) {
  RegretUpdate u;

  std::array<double, kNumVillainActions> q_col{};
  for (std::size_t c = 0; c < kNumVillainActions; ++c) {
    q_col[c] = (1.0 - exploration) * villain[c] + exploration / kNumVillainActions;
  }
  const std::size_t col = rng.categorical(q_col);
  const double col_weight = villain[col] / q_col[col];
  double hero_ev = 0.0;
  std::array<double, kNumActions> hero_cfv{};
  for (std::size_t a = 0; a < kNumActions; ++a) {
    hero_cfv[a] = col_weight * m.at(a, col);
    hero_ev += hero[a] * hero_cfv[a];
  }
  for (std::size_t a = 0; a < kNumActions; ++a) u.hero[a] = hero_cfv[a] - hero_ev;

  std::array<double, kNumActions> q_row{};
  for (std::size_t a = 0; a < kNumActions; ++a) {
    q_row[a] = (1.0 - exploration) * hero[a] + exploration / kNumActions;
  }
  const std::size_t row = rng.categorical(q_row);
  const double row_weight = hero[row] / q_row[row];
  double villain_ev = 0.0;
  std::array<double, kNumVillainActions> villain_cfv{};
  for (std::size_t c = 0; c < kNumVillainActions; ++c) {
    villain_cfv[c] = -row_weight * m.at(row, c);
    villain_ev += villain[c] * villain_cfv[c];
  }
  for (std::size_t c = 0; c < kNumVillainActions; ++c) {
    u.villain[c] = villain_cfv[c] - villain_ev;
  }
  u.sampled_column = col;
  u.sampled_row = row;
  return u;
}

// ---------------------------------------------------------------------------
// Policies

namespace {

class UniformModel final : public PolicyModel {
 public:
  ActionDistribution query(const DecisionState&) const override {
    return ActionDistribution::uniform();
  }
};

class NetModel final : public PolicyModel {
 public:
  explicit NetModel(Mlp net) : net_(std::move(net)) {}
  ActionDistribution query(const DecisionState& x) const override {
    const auto f = state_features(x);
    const auto logits = net_.forward(f);
    return ActionDistribution::from_weights(softmax3(logits));
  }

 private:
  Mlp net_;
};

void add_to(std::span<double> acc, std::span<const double> delta) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += delta[i];
}

}  // namespace

TabularPolicy::TabularPolicy(
    int buckets, std::vector<std::optional<ActionDistribution>> table)
    : buckets_(buckets), table_(std::move(table)) {
  if (table_.size() != num_keys(buckets_)) {
    throw Error(ErrorCode::kInvalidArgument, "tabular policy size mismatch");
  }
}

ActionDistribution TabularPolicy::query(const DecisionState& x) const {
  const auto& e = table_[key_index(state_key(x, buckets_), buckets_)];
  return e ? *e : ActionDistribution::uniform();
}

TrainedPolicy::TrainedPolicy(PolicyKind kind,
                             std::shared_ptr<const PolicyModel> model,
                             long iterations, SeedSpec seed)
    : kind_(kind), model_(std::move(model)), iterations_(iterations),
      seed_(seed) {}

// ---------------------------------------------------------------------------
// Learners

void validate(const LearnerOptions& o) {
  if (o.equity_buckets < 1 || o.equity_buckets > 1000) {
    throw Error(ErrorCode::kConfigError,
                "learners.equity_buckets must be in [1, 1000]");
  }
  if (!(o.mccfr_exploration >= 0.0 && o.mccfr_exploration < 1.0)) {
    throw Error(ErrorCode::kConfigError,
                "learners.mccfr_exploration must be in [0, 1)");
  }
}

void validate(const NfspParams& n) {
  auto rate = [](double v, const char* name) {
    if (!(v > 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kConfigError,
                  std::string(name) + " must be in (0, 1]");
    }
  };
  rate(n.rl_learning_rate, "nfsp.rl_learning_rate");
  rate(n.sl_learning_rate, "nfsp.sl_learning_rate");
  if (!(n.anticipatory >= 0.0 && n.anticipatory <= 1.0)) {
    throw Error(ErrorCode::kConfigError, "nfsp.anticipatory must be in [0, 1]");
  }
  if (!(n.epsilon_start >= 0.0 && n.epsilon_start <= 1.0 &&
        n.epsilon_end >= 0.0 && n.epsilon_end <= 1.0)) {
    throw Error(ErrorCode::kConfigError, "nfsp epsilons must be in [0, 1]");
  }
}

void Learner::train(StateStream& states, long iters) {
  for (long i = 0; i < iters; ++i) step(states());
}

CfrLearner::CfrLearner(const GameParams& g, SeedSpec seed,
                       const LearnerOptions& opts)
    : CfrLearner(PolicyKind::kCfr, g, seed, opts) {}

CfrLearner::CfrLearner(PolicyKind kind, const GameParams& g, SeedSpec seed,
                       const LearnerOptions& opts)
    : kind_(kind), game_(g), seed_(seed), opts_(opts) {
  validate(game_);
  validate(opts_);
  hero_.resize(num_keys(opts_.equity_buckets));
  villain_.resize(hero_.size());
}

void CfrLearner::step(const DecisionState& x) {
  const std::size_t key = key_index(state_key(x, opts_.equity_buckets),
                                    opts_.equity_buckets);
  RegretEntry& h = hero_[key];
  VillainEntry& v = villain_[key];
  const ActionDistribution sigma_h = regret_match(h.cum_regret);
  const VillainDistribution sigma_v = regret_match_villain(v.cum_regret);
  const RegretUpdate u = exact_regret_update(payoff_matrix(x, game_), sigma_h,
                                             sigma_v);
  add_to(h.cum_regret, u.hero);
  add_to(v.cum_regret, u.villain);
  add_to(h.cum_strategy, sigma_h.probs());
  add_to(v.cum_strategy, sigma_v);
  ++h.visits;
  ++iterations_;
}

VillainDistribution CfrLearner::villain_average(std::size_t key) const {
  const auto& s = villain_[key].cum_strategy;
  const double total = s[0] + s[1];
  if (total <= 0.0) return {0.5, 0.5};
  return {s[0] / total, s[1] / total};
}

TrainedPolicy CfrLearner::tabular_snapshot() const {
  std::vector<std::optional<ActionDistribution>> table(hero_.size());
  for (std::size_t k = 0; k < hero_.size(); ++k) {
    if (hero_[k].visits > 0) {
      table[k] = ActionDistribution::from_weights(hero_[k].cum_strategy);
    }
  }
  return TrainedPolicy(
      kind_,
      std::make_shared<TabularPolicy>(opts_.equity_buckets, std::move(table)),
      iterations_, seed_);
}

TrainedPolicy CfrLearner::snapshot() const { return tabular_snapshot(); }

MccfrLearner::MccfrLearner(const GameParams& g, SeedSpec seed,
                           const LearnerOptions& opts)
    : CfrLearner(PolicyKind::kMccfr, g, seed, opts) {
  const Rng base = Rng::stream(seed, "learner/mccfr");
  key_rngs_.reserve(hero_.size());
  for (std::size_t k = 0; k < hero_.size(); ++k) key_rngs_.push_back(base.derive(k));
}

void MccfrLearner::step(const DecisionState& x) {
  const std::size_t key = key_index(state_key(x, opts_.equity_buckets),
                                    opts_.equity_buckets);
  RegretEntry& h = hero_[key];
  VillainEntry& v = villain_[key];
  const ActionDistribution sigma_h = regret_match(h.cum_regret);
  const VillainDistribution sigma_v = regret_match_villain(v.cum_regret);
  const RegretUpdate u =
      sampled_regret_update(payoff_matrix(x, game_), sigma_h, sigma_v,
                            opts_.mccfr_exploration, key_rngs_[key]);
  add_to(h.cum_regret, u.hero);
  add_to(v.cum_regret, u.villain);
  add_to(h.cum_strategy, sigma_h.probs());
  add_to(v.cum_strategy, sigma_v);
  ++h.visits;
  ++iterations_;
}

TrainedPolicy MccfrLearner::snapshot() const { return tabular_snapshot(); }

DeepCfrLearner::DeepCfrLearner(const GameParams& g, const ApproximatorSpec& spec,
                               SeedSpec seed, const LearnerOptions& opts)
    : game_(g),
      spec_((validate(spec), spec)),
      seed_(seed),
      opts_(opts),
      rng_(Rng::stream(seed, "learner/deepcfr")),
      regret_net_(spec_, rng_, false),
      policy_net_(spec_, rng_, true),
      regret_buffer_(spec_.buffer_capacity, kFeatureWidth, kNumActions),
      policy_buffer_(spec_.buffer_capacity, kFeatureWidth, kNumActions) {
  validate(game_);
  validate(opts_);
  villain_.resize(num_keys(opts_.equity_buckets));
}

void DeepCfrLearner::step(const DecisionState& x) {
  const auto f = state_features(x);
  const auto predicted = regret_net_.forward(f);
  const ActionDistribution sigma_h =
      regret_match({predicted[0], predicted[1], predicted[2]});
  VillainEntry& v = villain_[key_index(state_key(x, opts_.equity_buckets),
                                       opts_.equity_buckets)];
  const VillainDistribution sigma_v = regret_match_villain(v.cum_regret);
  const RegretUpdate u = exact_regret_update(payoff_matrix(x, game_), sigma_h,
                                             sigma_v);
  regret_buffer_.add(f, u.hero, rng_);
  policy_buffer_.add(f, sigma_h.probs(), rng_);
  add_to(v.cum_regret, u.villain);
  add_to(v.cum_strategy, sigma_v);

  const std::size_t batch =
      std::min<std::size_t>(spec_.batch_size, regret_buffer_.size());
  regret_buffer_.sample(batch, rng_, batch_in_, batch_target_);
  regret_net_.loss(batch_in_, batch_target_, batch, Loss::kMeanSquaredError,
                   &grad_);
  regret_net_.sgd_step(grad_, spec_.learning_rate);
  policy_buffer_.sample(batch, rng_, batch_in_, batch_target_);
  policy_net_.loss(batch_in_, batch_target_, batch, Loss::kSoftmaxCrossEntropy,
                   &grad_);
  policy_net_.sgd_step(grad_, spec_.learning_rate);
  ++iterations_;
}

TrainedPolicy DeepCfrLearner::snapshot() const {
  return TrainedPolicy(PolicyKind::kDeepCfr,
                       std::make_shared<NetModel>(policy_net_), iterations_,
                       seed_);
}

NfspLearner::NfspLearner(const GameParams& g, const NfspParams& params,
                         const ApproximatorSpec& spec, SeedSpec seed,
                         long planned_iters, const LearnerOptions& opts)
    : game_(g),
      params_(params),
      spec_(spec),
      seed_(seed),
      planned_iters_(std::max(1L, planned_iters)),
      opts_(opts),
      rng_(Rng::stream(seed, "learner/nfsp")) {
  validate(game_);
  validate(params_);
  validate(opts_);
  const std::size_t keys = num_keys(opts_.equity_buckets);
  hero_.q.assign(keys * kNumActions, 0.0);
  hero_.counts.assign(keys * kNumActions, 0.0);
  villain_.q.assign(keys * kNumVillainActions, 0.0);
  villain_.counts.assign(keys * kNumVillainActions, 0.0);
  if (params_.use_approximator) {
    validate(spec_);
    Rng init = rng_.derive("avg-net-init");
    avg_net_.emplace(spec_, init, true);
    sl_buffer_.emplace(spec_.buffer_capacity, kFeatureWidth, kNumActions);
  }
}

double NfspLearner::epsilon() const {
  const double t =
      planned_iters_ <= 1
          ? 1.0
          : std::min(1.0, static_cast<double>(iterations_) / (planned_iters_ - 1));
  return params_.epsilon_start + (params_.epsilon_end - params_.epsilon_start) * t;
}

std::size_t NfspLearner::average_action(const Side& side, std::size_t key,
                                        std::size_t actions) {
  std::array<double, kNumActions> w{};
  double total = 0.0;
  for (std::size_t a = 0; a < actions; ++a) {
    w[a] = side.counts[key * actions + a];
    total += w[a];
  }
  if (total <= 0.0) return rng_.uniform_int(actions);
  return rng_.categorical(std::span<const double>(w.data(), actions));
}

std::size_t NfspLearner::pick(const Side& side, std::size_t key,
                              std::size_t actions, bool best_response) {
  if (!best_response) return average_action(side, key, actions);
  if (rng_.uniform() < epsilon()) return rng_.uniform_int(actions);
  std::size_t best = 0;
  for (std::size_t a = 1; a < actions; ++a) {
    if (side.q[key * actions + a] > side.q[key * actions + best]) best = a;
  }
  return best;
}

void NfspLearner::step(const DecisionState& x) {
  const std::size_t key = key_index(state_key(x, opts_.equity_buckets),
                                    opts_.equity_buckets);
  const PayoffMatrix m = payoff_matrix(x, game_);
  const bool hero_br = rng_.uniform() < params_.anticipatory;
  const bool villain_br = rng_.uniform() < params_.anticipatory;

  std::size_t a;
  if (!hero_br && avg_net_) {
    const auto f = state_features(x);
    a = rng_.categorical(softmax3(avg_net_->forward(f)));
  } else {
    a = pick(hero_, key, kNumActions, hero_br);
  }
  const std::size_t c = pick(villain_, key, kNumVillainActions, villain_br);
  const double reward = m.at(a, c);

  double& qh = hero_.q[key * kNumActions + a];
  qh += params_.rl_learning_rate * (reward - qh);
  double& qv = villain_.q[key * kNumVillainActions + c];
  qv += params_.rl_learning_rate * (-reward - qv);

  if (hero_br) {
    if (avg_net_) {
      const auto f = state_features(x);
      std::array<double, kNumActions> target{};
      target[a] = 1.0;
      sl_buffer_->add(f, target, rng_);
      const std::size_t batch =
          std::min<std::size_t>(spec_.batch_size, sl_buffer_->size());
      sl_buffer_->sample(batch, rng_, batch_in_, batch_target_);
      avg_net_->loss(batch_in_, batch_target_, batch,
                     Loss::kSoftmaxCrossEntropy, &grad_);
      avg_net_->sgd_step(grad_, params_.sl_learning_rate);
    } else {
      hero_.counts[key * kNumActions + a] += 1.0;
    }
  }
  if (villain_br) villain_.counts[key * kNumVillainActions + c] += 1.0;
  ++iterations_;
}

TrainedPolicy NfspLearner::snapshot() const {
  if (avg_net_) {
    return TrainedPolicy(PolicyKind::kNfsp, std::make_shared<NetModel>(*avg_net_),
                         iterations_, seed_);
  }
  const std::size_t keys = num_keys(opts_.equity_buckets);
  std::vector<std::optional<ActionDistribution>> table(keys);
  for (std::size_t k = 0; k < keys; ++k) {
    std::array<double, kNumActions> w{};
    double total = 0.0;
    for (std::size_t a = 0; a < kNumActions; ++a) {
      w[a] = hero_.counts[k * kNumActions + a];
      total += w[a];
    }
    if (total > 0.0) table[k] = ActionDistribution::from_weights(w);
  }
  return TrainedPolicy(
      PolicyKind::kNfsp,
      std::make_shared<TabularPolicy>(opts_.equity_buckets, std::move(table)),
      iterations_, seed_);
}

TrainedPolicy cfr_train(StateStream& states, long iters, const GameParams& g,
                        SeedSpec seed, const LearnerOptions& opts) {
  CfrLearner learner(g, seed, opts);
  learner.train(states, iters);
  return learner.snapshot();
}

TrainedPolicy mccfr_train(StateStream& states, long iters, const GameParams& g,
                          SeedSpec seed, const LearnerOptions& opts) {
  MccfrLearner learner(g, seed, opts);
  learner.train(states, iters);
  return learner.snapshot();
}

TrainedPolicy deepcfr_train(StateStream& states, long iters,
                            const GameParams& g, const ApproximatorSpec& spec,
                            SeedSpec seed, const LearnerOptions& opts) {
  DeepCfrLearner learner(g, spec, seed, opts);
  learner.train(states, iters);
  return learner.snapshot();
}

TrainedPolicy nfsp_train(StateStream& states, long iters, const GameParams& g,
                         const NfspParams& n, const ApproximatorSpec& spec,
                         SeedSpec seed, const LearnerOptions& opts) {
  NfspLearner learner(g, n, spec, seed, iters, opts);
  learner.train(states, iters);
  return learner.snapshot();
}

TrainedPolicy random_policy() {
  return TrainedPolicy(PolicyKind::kRandom, std::make_shared<UniformModel>(), 0,
                       SeedSpec{});
}

// ---------------------------------------------------------------------------
// Tabular policy files

namespace {

constexpr std::string_view kPolicyMagic = "# gtobench-policy v1";

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

[[noreturn]] void bad_file(const std::string& why) {
  throw Error(ErrorCode::kIoError, "policy file: " + why);
}

}  // namespace

void write_tabular_policy(std::ostream& out, const TrainedPolicy& policy) {
  const TabularPolicy* table = policy.tabular();
  if (!table) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(policy.kind())) + " policy is not tabular");
  }
  std::ostringstream body;
  body << "key,street,bucket,texture,players,call,raise,fold\n";
  char buf[128];
  for (std::size_t k = 0; k < table->size(); ++k) {
    const auto& e = table->entry(k);
    if (!e) continue;
    const StateKey key = key_from_index(k, table->buckets());
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", e->call(), e->raise(),
                  e->fold());
    body << k << ',' << to_string(key.street) << ',' << key.equity_bucket << ','
         << to_string(key.texture) << ',' << key.players << ',' << buf << '\n';
  }
  const std::string text = body.str();
  out << kPolicyMagic << '\n'
      << "# kind=" << to_string(policy.kind()) << " buckets=" << table->buckets()
      << " iterations=" << policy.iterations_trained()
      << " master_seed=" << policy.seed().master_seed
      << " run_index=" << policy.seed().run_index
      << " body_hash=" << hex64(fnv1a64(text)) << '\n'
      << text;
  if (!out) throw Error(ErrorCode::kIoError, "failed writing policy file");
}

TrainedPolicy read_tabular_policy(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kPolicyMagic) bad_file("bad magic");
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) bad_file("no header");

  std::istringstream hdr(line.substr(2));
  std::string field;
  PolicyKind kind = PolicyKind::kCfr;
  int buckets = 0;
  long iterations = 0;
  SeedSpec seed;
  std::string body_hash;
  while (hdr >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) bad_file("malformed header field " + field);
    const std::string k = field.substr(0, eq);
    const std::string v = field.substr(eq + 1);
    try {
      if (k == "kind") kind = parse_policy_kind(v);
      else if (k == "buckets") buckets = std::stoi(v);
      else if (k == "iterations") iterations = std::stol(v);
      else if (k == "master_seed") seed.master_seed = std::stoull(v);
      else if (k == "run_index") seed.run_index = std::stoull(v);
      else if (k == "body_hash") body_hash = v;
    } catch (const std::exception&) {
      bad_file("bad value for " + k);
    }
  }
  if (buckets < 1) bad_file("missing bucket count");

  std::ostringstream rest;
  rest << in.rdbuf();
  const std::string text = rest.str();
  if (hex64(fnv1a64(text)) != body_hash) bad_file("body hash mismatch");

  std::vector<std::optional<ActionDistribution>> table(num_keys(buckets));
  std::istringstream rows(text);
  std::getline(rows, line);  // column header
  while (std::getline(rows, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) cols.push_back(field);
    if (cols.size() != 8) bad_file("row with " + std::to_string(cols.size()) + " columns");
    std::size_t key = 0;
    std::array<double, kNumActions> p{};
    try {
      key = std::stoull(cols[0]);
      for (std::size_t a = 0; a < kNumActions; ++a) p[a] = std::stod(cols[5 + a]);
    } catch (const std::exception&) {
      bad_file("unparseable row '" + line + "'");
    }
    if (key >= table.size()) bad_file("key out of range");
    table[key] = ActionDistribution::from_probabilities(p);
  }
  return TrainedPolicy(kind,
                       std::make_shared<TabularPolicy>(buckets, std::move(table)),
                       iterations, seed);
}

}  // namespace gtobench
