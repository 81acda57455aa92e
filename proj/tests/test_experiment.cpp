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
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gtobench/experiment.hpp"
#include "json.hpp"

namespace gtobench {
namespace {

namespace fs = std::filesystem;

std::string temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("gtobench-test-" + name);
  fs::remove_all(p);
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.models = {PolicyKind::kRandom};
  c.iters = 50;
  c.eval_states = 200;
  c.seeds = 3;
  c.reference = ReferenceKind::kProxy;
  return c;
}

TEST_CASE("random rows: CE is ln 3 with zero spread and zero deltas") {
  for (Mode mode : {Mode::kHeadsUp, Mode::kMultiway}) {
    ExperimentConfig c = small_config();
    apply_setting(c, "mode", std::string(to_string(mode)));
    const EvalReport r = run_experiment(c);
    CHECK(r.rows.size() == (mode == Mode::kHeadsUp ? 1u : 4u));
    for (const auto& row : r.rows) {
      CHECK(row.model == PolicyKind::kRandom);
      CHECK(std::abs(row.ce.mean - std::log(3.0)) < 1e-12);
      REQUIRE(row.ce.ci.has_value());
      CHECK(*row.ce.ci < 1e-12);
      CHECK(row.top1.delta == 0.0);
      CHECK(row.kl.delta == 0.0);
      CHECK(row.ce.delta == 0.0);
      CHECK(row.nashconv.delta == 0.0);
    }
    const std::string csv = render_report(r, ReportFormat::kCsv);
    CHECK(csv.find(",1.098612289,") != std::string::npos);
  }
}

TEST_CASE("multiway report holds every player count and model once") {
  ExperimentConfig c = small_config();
  apply_setting(c, "mode", "multiway");
  c.models = {PolicyKind::kCfr, PolicyKind::kRandom, PolicyKind::kNfsp};
  c.seeds = 2;
  const EvalReport r = run_experiment(c);
  REQUIRE(r.rows.size() == 12);
  std::set<std::pair<int, PolicyKind>> seen;
  for (const auto& row : r.rows) seen.insert({row.players, row.model});
  CHECK(seen.size() == 12);
  CHECK(r.rows.front().players == 3);
  CHECK(r.rows.front().model == PolicyKind::kCfr);
  CHECK(r.rows.back().players == 6);
  CHECK(r.rows.back().model == PolicyKind::kRandom);
}

TEST_CASE("runs are deterministic regardless of thread count") {
  ExperimentConfig c = small_config();
  c.models = {PolicyKind::kCfr, PolicyKind::kMccfr, PolicyKind::kDeepCfr,
              PolicyKind::kNfsp, PolicyKind::kRandom};
  c.threads = 1;
  const std::string a = render_report(run_experiment(c), ReportFormat::kCsv);
  c.threads = 3;
  const std::string b = render_report(run_experiment(c), ReportFormat::kCsv);
  CHECK(a == b);
  c.master_seed += 1;
  CHECK(render_report(run_experiment(c), ReportFormat::kCsv) != a);
}

TEST_CASE("single seed leaves CI columns empty") {
  ExperimentConfig c = small_config();
  c.seeds = 1;
  const EvalReport r = run_experiment(c);
  CHECK_FALSE(r.rows[0].top1.ci.has_value());
  const std::string csv = render_report(r, ReportFormat::kCsv);
  CHECK(csv.find("headsup,2,random,50,") != std::string::npos);
  CHECK(csv.find(",,") != std::string::npos);
}

TEST_CASE("report formats") {
  ExperimentConfig c = small_config();
  c.models = {PolicyKind::kCfr, PolicyKind::kRandom};
  const EvalReport r = run_experiment(c);
  const std::string csv = render_report(r, ReportFormat::kCsv);
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);

  const std::string md = render_report(r, ReportFormat::kMarkdown);
  CHECK(md.find("| Model | iters | Top-1") != std::string::npos);
  std::size_t tables = 0;
  for (std::size_t p = md.find("| Model |"); p != std::string::npos;
       p = md.find("| Model |", p + 1)) {
    ++tables;
  }
  CHECK(tables == 1);
  CHECK(md.find("**") != std::string::npos);

  const auto j = nlohmann::json::parse(render_report(r, ReportFormat::kJson));
  CHECK(j["metadata"]["config_hash"] == config_hash(c));
  CHECK(j["metadata"]["rng_algorithm"] == std::string(kRngAlgorithm));
  CHECK(j["metadata"]["config"].contains("proxy.raise_threshold"));
  CHECK(j["metadata"]["config"].contains("game.fold_equity"));
  CHECK(j["rows"].size() == 2);

  EvalReport empty;
  CHECK_THROWS_AS(render_report(empty, ReportFormat::kCsv), Error);
}

TEST_CASE("training and evaluation streams are disjoint") {
  ExperimentConfig c = small_config();
  const EvalReport r = run_experiment(c);
  std::set<std::string> train(r.metadata.training_streams.begin(),
                              r.metadata.training_streams.end());
  CHECK(train.size() == 3);
  for (const auto& e : r.metadata.evaluation_streams) CHECK(train.count(e) == 0);
}

TEST_CASE("emit_reports writes every format") {
  ExperimentConfig c = small_config();
  c.output_dir = temp_dir("emit");
  const auto paths = emit_reports(run_experiment(c), c);
  CHECK(paths.size() == 3);
  for (const auto& p : paths) CHECK(fs::exists(p));
  CHECK_THROWS_AS(emit_report(run_experiment(c), ReportFormat::kCsv,
                              "/proc/gtobench/denied.csv"),
                  Error);
}

TEST_CASE("stored MCCFR reference") {
  ExperimentConfig c;
  c.output_dir = temp_dir("reference");
  c.reference_iters = 200000;
  const std::string path = train_reference(c);
  CHECK(path == reference_path(c));

  std::ifstream in(path, std::ios::binary);
  const TrainedPolicy stored = read_tabular_policy(in);
  CHECK(stored.iterations_trained() == 200000);
  for (std::size_t k = 0; k < stored.tabular()->size(); ++k) {
    if (const auto& e = stored.tabular()->entry(k)) {
      CHECK_NOTHROW(validate_distribution(*e));
    }
  }

  // Retraining in memory reproduces every query of the stored file.
  ExperimentConfig fresh = c;
  fresh.output_dir = temp_dir("reference-fresh");
  const TrainedPolicy trained = load_or_train_reference(fresh);
  const TrainedPolicy loaded = load_or_train_reference(c);
  GeneratorConfig gen;
  Rng rng(31);
  std::vector<DecisionState> states;
  for (int i = 0; i < 1000; ++i) states.push_back(sample_state(gen, rng));
  for (const auto& x : states) CHECK(loaded.query(x) == trained.query(x));

  states.resize(500);
  StateStream s = generator_stream(gen, Rng::stream({c.master_seed, 0}, "train"));
  const TrainedPolicy short_run = mccfr_train(s, 500, c.game, {c.master_seed, 0});
  CHECK(nashconv_heuristic(loaded, states, c.game) <=
        nashconv_heuristic(short_run, states, c.game));

  ExperimentConfig missing = c;
  missing.output_dir = temp_dir("reference-missing");
  missing.reference_iters = 0;
  try {
    load_or_train_reference(missing);
    FAIL("expected ReferenceMissing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kReferenceMissing);
  }
}

TEST_CASE("reference path depends on the settings that shape it") {
  ExperimentConfig a, b;
  b.game.fold_equity = 0.25;
  CHECK(reference_path(a) != reference_path(b));
  b = a;
  b.iters = 10;
  b.seeds = 2;
  CHECK(reference_path(a) == reference_path(b));
}

TEST_CASE("export_states") {
  ExperimentConfig c;
  c.output_dir = temp_dir("export");
  const auto paths = export_states(c, 25);
  REQUIRE(paths.size() == 2);
  std::istringstream states(slurp(paths[0]));
  std::istringstream matrices(slurp(paths[1]));
  std::string line;
  int n = 0;
  while (std::getline(states, line)) ++n;
  CHECK(n == 26);
  std::getline(matrices, line);
  std::getline(matrices, line);
  CHECK(std::count(line.begin(), line.end(), ',') == 9);
}

}  // namespace
}  // namespace gtobench
