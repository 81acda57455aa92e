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

#include "gtobench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "gtobench/proxy.hpp"
#include "json.hpp"

namespace gtobench {
namespace {

namespace fs = std::filesystem;

// The reference learner gets a run index no experiment seed can reach.
constexpr std::uint64_t kReferenceRunIndex = std::numeric_limits<std::uint64_t>::max();

std::string utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<int> player_counts(Mode mode) {
  if (mode == Mode::kHeadsUp) return {2};
  return {3, 4, 5, 6};
}

std::string eval_label(int players) { return "eval/k" + std::to_string(players); }
constexpr std::string_view kTrainLabel = "train";

// Reference-side quantities shared by every model on one evaluation set.
struct EvalSet {
  int players = 2;
  std::vector<DecisionState> states;
  std::vector<ActionDistribution> reference;
  std::vector<PayoffMatrix> matrices;
  std::vector<double> equilibrium_values;
};

struct CellMetrics {
  double top1 = 0.0, kl = 0.0, ce = 0.0, nashconv = 0.0;
};

CellMetrics evaluate(const TrainedPolicy& policy, const EvalSet& set) {
  CellMetrics m;
  const double n = static_cast<double>(set.states.size());
  // Ordered sums keep results independent of scheduling.
  for (std::size_t i = 0; i < set.states.size(); ++i) {
    const ActionDistribution p = policy.query(set.states[i]);
    const ActionDistribution& q = set.reference[i];
    m.top1 += top1_agreement(p, q);
    m.kl += kl_divergence(p, q);
    m.ce += cross_entropy(q, p);
    m.nashconv += std::max(
        0.0, set.equilibrium_values[i] - guaranteed_value(set.matrices[i], p));
  }
  m.top1 /= n;
  m.kl /= n;
  m.ce /= n;
  m.nashconv /= n;
  return m;
}

std::vector<PolicyKind> canonical_models(const std::vector<PolicyKind>& models) {
  std::vector<PolicyKind> out;
  for (PolicyKind k : kAllPolicyKinds) {
    if (std::find(models.begin(), models.end(), k) != models.end()) out.push_back(k);
  }
  return out;
}

TrainedPolicy train_model(PolicyKind kind, const ExperimentConfig& cfg,
                          const SeedSpec& seed) {
  StateStream stream =
      generator_stream(cfg.generator, Rng::stream(seed, kTrainLabel));
  switch (kind) {
    case PolicyKind::kCfr:
      return cfr_train(stream, cfg.iters, cfg.game, seed, cfg.learners);
    case PolicyKind::kMccfr:
      return mccfr_train(stream, cfg.iters, cfg.game, seed, cfg.learners);
    case PolicyKind::kDeepCfr:
      return deepcfr_train(stream, cfg.iters, cfg.game, cfg.approximator, seed,
                           cfg.learners);
    case PolicyKind::kNfsp:
      return nfsp_train(stream, cfg.iters, cfg.game, cfg.nfsp, cfg.approximator,
                        seed, cfg.learners);
    case PolicyKind::kRandom:
      return random_policy();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown policy kind");
}

// results[seed][players index][model index]; the last model slot is the
// Random baseline used for deltas.
using SeedResults = std::vector<std::vector<CellMetrics>>;

SeedResults run_seed(const ExperimentConfig& cfg,
                     const std::vector<PolicyKind>& models,
                     const std::optional<TrainedPolicy>& reference,
                     std::uint64_t run_index) {
  const SeedSpec seed{cfg.master_seed, run_index};
  std::vector<EvalSet> sets;
  for (int k : player_counts(cfg.mode)) {
    EvalSet set;
    set.players = k;
    Rng rng = Rng::stream(seed, eval_label(k));
    set.states.reserve(cfg.eval_states);
    for (int i = 0; i < cfg.eval_states; ++i) {
      set.states.push_back(sample_state_with_players(cfg.generator, k, rng));
    }
    for (const auto& x : set.states) {
      set.reference.push_back(reference ? reference->query(x)
                                        : reference_proxy(x, cfg.proxy));
      set.matrices.push_back(payoff_matrix(x, cfg.game));
      set.equilibrium_values.push_back(
          solve_equilibrium_bruteforce(set.matrices.back()).value);
    }
    sets.push_back(std::move(set));
  }

  SeedResults out(sets.size(), std::vector<CellMetrics>(models.size() + 1));
  for (std::size_t m = 0; m <= models.size(); ++m) {
    const TrainedPolicy policy =
        m < models.size() ? train_model(models[m], cfg, seed) : random_policy();
    for (std::size_t s = 0; s < sets.size(); ++s) out[s][m] = evaluate(policy, sets[s]);
  }
  return out;
}

MetricSummary summarize(const std::vector<double>& runs,
                        const std::vector<double>& deltas) {
  MetricSummary s;
  s.mean = mean(runs);
  s.delta = mean(deltas);
  if (runs.size() >= 2) {
    s.ci = confidence_interval(runs).halfwidth;
    s.delta_ci = confidence_interval(deltas).halfwidth;
  }
  return s;
}

std::string reference_key_text(const ExperimentConfig& cfg) {
  std::string text = "reference_iters = " + std::to_string(cfg.reference_iters) +
                     "\nmaster_seed = " + std::to_string(cfg.master_seed) +
                     "\nrng_algorithm = " + cfg.rng_algorithm + "\n";
  for (const auto& [k, v] : to_config_map(cfg)) {
    if (k.rfind("generator.", 0) == 0 || k.rfind("game.", 0) == 0 ||
        k.rfind("learners.", 0) == 0) {
      text += k + " = " + v + "\n";
    }
  }
  return text;
}

TrainedPolicy train_reference_policy(const ExperimentConfig& cfg) {
  const SeedSpec seed{cfg.master_seed, kReferenceRunIndex};
  GeneratorConfig gen = cfg.generator;
  gen.headsup = true;
  StateStream stream = generator_stream(gen, Rng::stream(seed, "reference/train"));
  return mccfr_train(stream, cfg.reference_iters, cfg.game, seed, cfg.learners);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create directory " + dir + ": " + ec.message());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

std::string fmt10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt3(double v, bool sign = false) {
  char buf[40];
  std::snprintf(buf, sizeof buf, sign ? "%+.3f" : "%.3f", v);
  return buf;
}

std::string render_csv(const EvalReport& r) {
  std::string out = std::string(kCsvHeader) + "\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? fmt10(*v) : std::string();
  };
  for (const auto& row : r.rows) {
    out += std::string(to_string(r.mode)) + "," + std::to_string(row.players) +
           "," + std::string(to_string(row.model)) + "," +
           std::to_string(row.iters) + "," + fmt10(row.top1.mean) + "," +
           opt(row.top1.ci) + "," + fmt10(row.top1.delta) + "," +
           fmt10(row.kl.mean) + "," + opt(row.kl.ci) + "," +
           fmt10(row.kl.delta) + "," + fmt10(row.ce.mean) + "," +
           opt(row.ce.ci) + "," + fmt10(row.ce.delta) + "," +
           fmt10(row.nashconv.mean) + "," + std::to_string(row.n_states) + "," +
           std::to_string(row.seeds) + "\n";
  }
  return out;
}

std::string display_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::kCfr: return "CFR";
    case PolicyKind::kMccfr: return "MCCFR";
    case PolicyKind::kDeepCfr: return "DeepCFR";
    case PolicyKind::kNfsp: return "NFSP";
    case PolicyKind::kRandom: return "Random";
  }
  return "?";
}

std::string render_markdown(const EvalReport& r) {
  std::string out = "# gtobench report\n\n";
  out += "Reference: " + r.metadata.reference + "  \n";
  out += "Config hash: `" + r.metadata.config_hash + "`  \n";
  out += "RNG: `" + r.metadata.rng_algorithm + "`\n";

  std::vector<int> players;
  for (const auto& row : r.rows) {
    if (std::find(players.begin(), players.end(), row.players) == players.end()) {
      players.push_back(row.players);
    }
  }
  for (int k : players) {
    std::vector<const MetricRow*> rows;
    for (const auto& row : r.rows) {
      if (row.players == k) rows.push_back(&row);
    }
    // Best per metric: Top-1 max, the rest min.
    auto best = [&](auto get, bool maximize) {
      double b = get(*rows.front());
      for (const auto* row : rows) {
        const double v = get(*row);
        b = maximize ? std::max(b, v) : std::min(b, v);
      }
      return b;
    };
    const double best_top1 = best([](const MetricRow& m) { return m.top1.mean; }, true);
    const double best_kl = best([](const MetricRow& m) { return m.kl.mean; }, false);
    const double best_ce = best([](const MetricRow& m) { return m.ce.mean; }, false);
    const double best_nc = best([](const MetricRow& m) { return m.nashconv.mean; }, false);

    out += "\n## " + (k == 2 ? std::string("Heads-up") : "Multiway, k = " + std::to_string(k)) +
           "\n\n";
    out += "| Model | iters | Top-1 ↑ | Δ | KL(p‖q) ↓ | Δ | CE(q,p) ↓ | Δ | NashConv ↓ |\n";
    out += "|---|---|---|---|---|---|---|---|---|\n";
    auto cell = [](const MetricSummary& s, bool bold) {
      std::string v = fmt3(s.mean);
      if (s.ci) v += " ± " + fmt3(*s.ci);
      return bold ? "**" + v + "**" : v;
    };
    for (const auto* row : rows) {
      out += "| " + display_name(row->model) + " | " + std::to_string(row->iters) +
             " | " + cell(row->top1, row->top1.mean == best_top1) + " | " +
             fmt3(row->top1.delta, true) + " | " +
             cell(row->kl, row->kl.mean == best_kl) + " | " +
             fmt3(row->kl.delta, true) + " | " +
             cell(row->ce, row->ce.mean == best_ce) + " | " +
             fmt3(row->ce.delta, true) + " | " +
             cell(row->nashconv, row->nashconv.mean == best_nc) + " |\n";
    }
  }
  return out;
}

nlohmann::ordered_json summary_json(const MetricSummary& s) {
  nlohmann::ordered_json j;
  j["mean"] = s.mean;
  j["ci_halfwidth"] = s.ci ? nlohmann::ordered_json(*s.ci) : nullptr;
  j["delta"] = s.delta;
  j["delta_ci_halfwidth"] = s.delta_ci ? nlohmann::ordered_json(*s.delta_ci) : nullptr;
  return j;
}

std::string render_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(r.mode));
  auto& meta = j["metadata"];
  meta["config_hash"] = r.metadata.config_hash;
  meta["rng_algorithm"] = r.metadata.rng_algorithm;
  meta["reference"] = r.metadata.reference;
  meta["started_at"] = r.metadata.started_at;
  meta["finished_at"] = r.metadata.finished_at;
  meta["probability_floor"] = kProbabilityFloor;
  meta["log_base"] = "e";
  meta["training_streams"] = r.metadata.training_streams;
  meta["evaluation_streams"] = r.metadata.evaluation_streams;
  meta["config"] = r.metadata.config;
  auto& rows = j["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json jr;
    jr["model"] = std::string(to_string(row.model));
    jr["players"] = row.players;
    jr["iters"] = row.iters;
    jr["top1"] = summary_json(row.top1);
    jr["kl_p_q"] = summary_json(row.kl);
    jr["ce_q_p"] = summary_json(row.ce);
    jr["nashconv"] = summary_json(row.nashconv);
    jr["n_states"] = row.n_states;
    jr["seeds"] = row.seeds;
    jr["runs"] = {{"top1", row.top1_runs},
                  {"kl_p_q", row.kl_runs},
                  {"ce_q_p", row.ce_runs},
                  {"nashconv", row.nashconv_runs}};
    rows.push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string reference_path(const ExperimentConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(reference_key_text(cfg))));
  return (fs::path(cfg.output_dir) / ("reference-" + std::string(buf) + ".csv")).string();
}

std::string train_reference(const ExperimentConfig& cfg) {
  validate(cfg);
  if (cfg.mode != Mode::kHeadsUp) {
    throw Error(ErrorCode::kConfigError, "the MCCFR reference is heads-up only");
  }
  if (cfg.reference_iters < 1) {
    throw Error(ErrorCode::kConfigError, "reference_iters must be >= 1 to train");
  }
  const TrainedPolicy policy = train_reference_policy(cfg);
  ensure_dir(cfg.output_dir);
  const std::string path = reference_path(cfg);
  std::ostringstream body;
  write_tabular_policy(body, policy);
  write_file(path, body.str());
  return path;
}

TrainedPolicy load_or_train_reference(const ExperimentConfig& cfg) {
  const std::string path = reference_path(cfg);
  if (std::ifstream in(path, std::ios::binary); in) return read_tabular_policy(in);
  if (cfg.reference_iters == 0) {
    throw Error(ErrorCode::kReferenceMissing,
                "no stored reference at " + path + " and reference_iters = 0");
  }
  train_reference(cfg);
  std::ifstream in(path, std::ios::binary);
  return read_tabular_policy(in);
}

EvalReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  EvalReport report;
  report.mode = cfg.mode;
  report.metadata.started_at = utc_now();
  report.metadata.config_hash = config_hash(cfg);
  report.metadata.rng_algorithm = cfg.rng_algorithm;
  report.metadata.config = to_config_map(cfg);

  std::optional<TrainedPolicy> reference;
  if (cfg.resolved_reference() == ReferenceKind::kMccfrReference) {
    reference = load_or_train_reference(cfg);
    report.metadata.reference =
        "mccfr_reference (" + std::to_string(reference->iterations_trained()) +
        " iterations, " + fs::path(reference_path(cfg)).filename().string() + ")";
  } else {
    report.metadata.reference =
        cfg.mode == Mode::kHeadsUp ? "proxy (closed-form heads-up q)"
                                   : "proxy (closed-form multiway q_k)";
  }

  const std::vector<PolicyKind> models = canonical_models(cfg.models);
  const auto ks = player_counts(cfg.mode);
  for (int s = 0; s < cfg.seeds; ++s) {
    const std::string prefix = "seed" + std::to_string(s) + "/";
    report.metadata.training_streams.push_back(prefix + std::string(kTrainLabel));
    for (int k : ks) report.metadata.evaluation_streams.push_back(prefix + eval_label(k));
  }

  std::vector<SeedResults> results(cfg.seeds);
  std::vector<std::exception_ptr> errors(cfg.seeds);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int s = next++; s < cfg.seeds; s = next++) {
      try {
        results[s] = run_seed(cfg, models, reference, static_cast<std::uint64_t>(s));
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.seeds);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Deterministic reduction in (players, model, seed) order.
  const std::size_t random_slot = models.size();
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    for (std::size_t m = 0; m < models.size(); ++m) {
      MetricRow row;
      row.model = models[m];
      row.players = ks[ki];
      row.iters = cfg.iters;
      row.n_states = cfg.eval_states;
      row.seeds = cfg.seeds;
      std::vector<double> d_top1, d_kl, d_ce, d_nc;
      for (int s = 0; s < cfg.seeds; ++s) {
        const CellMetrics& c = results[s][ki][m];
        const CellMetrics& base = results[s][ki][random_slot];
        row.top1_runs.push_back(c.top1);
        row.kl_runs.push_back(c.kl);
        row.ce_runs.push_back(c.ce);
        row.nashconv_runs.push_back(c.nashconv);
        d_top1.push_back(c.top1 - base.top1);
        d_kl.push_back(base.kl - c.kl);
        d_ce.push_back(base.ce - c.ce);
        d_nc.push_back(base.nashconv - c.nashconv);
      }
      row.top1 = summarize(row.top1_runs, d_top1);
      row.kl = summarize(row.kl_runs, d_kl);
      row.ce = summarize(row.ce_runs, d_ce);
      row.nashconv = summarize(row.nashconv_runs, d_nc);
      report.rows.push_back(std::move(row));
    }
  }
  report.metadata.finished_at = utc_now();
  return report;
}

std::string render_report(const EvalReport& r, ReportFormat format) {
  if (r.rows.empty()) throw Error(ErrorCode::kEmptyReport, "report has no rows");
  switch (format) {
    case ReportFormat::kCsv: return render_csv(r);
    case ReportFormat::kJson: return render_json(r);
    case ReportFormat::kMarkdown: return render_markdown(r);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown report format");
}

void emit_report(const EvalReport& r, ReportFormat format,
                 const std::string& path) {
  const std::string text = render_report(r, format);
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) ensure_dir(parent.string());
  write_file(path, text);
}

std::vector<std::string> emit_reports(const EvalReport& r,
                                      const ExperimentConfig& cfg) {
  std::vector<std::string> paths;
  for (ReportFormat f : cfg.formats) {
    const char* ext = f == ReportFormat::kCsv    ? "csv"
                      : f == ReportFormat::kJson ? "json"
                                                 : "md";
    const std::string path = (fs::path(cfg.output_dir) /
                              ("report-" + std::string(to_string(r.mode)) + "." + ext))
                                 .string();
    emit_report(r, f, path);
    paths.push_back(path);
  }
  return paths;
}

std::vector<std::string> export_states(const ExperimentConfig& cfg, int count) {
  validate(cfg);
  if (count < 1) throw Error(ErrorCode::kConfigError, "export needs count >= 1");
  Rng rng = Rng::stream(SeedSpec{cfg.master_seed, 0}, "export");
  std::vector<DecisionState> states;
  for (int i = 0; i < count; ++i) states.push_back(sample_state(cfg.generator, rng));
  ensure_dir(cfg.output_dir);
  const std::string states_path = (fs::path(cfg.output_dir) / "states.csv").string();
  const std::string matrices_path = (fs::path(cfg.output_dir) / "matrices.csv").string();
  std::ostringstream s, m;
  write_states_csv(s, states);
  write_matrices_csv(m, states, cfg.game);
  write_file(states_path, s.str());
  write_file(matrices_path, m.str());
  return {states_path, matrices_path};
}

}  // namespace gtobench
