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

#ifndef GTOBENCH_EXPERIMENT_HPP
#define GTOBENCH_EXPERIMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtobench/config.hpp"
#include "gtobench/learners.hpp"
#include "gtobench/metrics.hpp"

namespace gtobench {

// One metric aggregated over seeds. `ci` is empty with a single seed.
struct MetricSummary {
  double mean = 0.0;
  std::optional<double> ci;
  // Improvement over Random on the same seeds: Top-1 model - random, the
  // divergences random - model.
  double delta = 0.0;
  std::optional<double> delta_ci;
};

struct MetricRow {
  PolicyKind model = PolicyKind::kRandom;
  int players = 2;
  long iters = 0;
  MetricSummary top1;
  MetricSummary kl;
  MetricSummary ce;
  MetricSummary nashconv;
  int n_states = 0;
  int seeds = 0;
  // Per-seed values in seed order; kept for callers that need the raw runs.
  std::vector<double> top1_runs, kl_runs, ce_runs, nashconv_runs;
};

struct ReportMetadata {
  std::string config_hash;
  std::string rng_algorithm;
  std::string reference;
  std::string started_at;
  std::string finished_at;
  std::map<std::string, std::string> config;
  // Every RNG stream label consumed, grouped by purpose.
  std::vector<std::string> training_streams;
  std::vector<std::string> evaluation_streams;
};

struct EvalReport {
  Mode mode = Mode::kHeadsUp;
  std::vector<MetricRow> rows;
  ReportMetadata metadata;
};

// Per-seed training and evaluation, then aggregation across seeds. Rows come
// out in (players, model) order, models in canonical order.
EvalReport run_experiment(const ExperimentConfig& cfg);

// Renders in one format. Throws kEmptyReport on a report without rows.
std::string render_report(const EvalReport& r, ReportFormat format);
// Writes render_report output to `path`; throws kIoError on failure.
void emit_report(const EvalReport& r, ReportFormat format,
                 const std::string& path);
// Writes every configured format into cfg.output_dir; returns the paths.
std::vector<std::string> emit_reports(const EvalReport& r,
                                      const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader =
    "mode,players,model,iters,top1,top1_ci,top1_delta,kl,kl_ci,kl_delta,ce,"
    "ce_ci,ce_delta,nashconv,n_states,seeds";

// Location of the stored MCCFR reference for this configuration; the name
// embeds a hash of every setting that influences the reference.
std::string reference_path(const ExperimentConfig& cfg);

// Trains the high-iteration MCCFR reference, stores it at reference_path and
// returns the path.
std::string train_reference(const ExperimentConfig& cfg);

// Loads the stored reference if present, otherwise trains and stores it.
// Throws kReferenceMissing when absent and reference_iters is zero.
TrainedPolicy load_or_train_reference(const ExperimentConfig& cfg);

// Writes `count` generator states (states.csv) and their payoff matrices
// (matrices.csv) into cfg.output_dir; returns both paths.
std::vector<std::string> export_states(const ExperimentConfig& cfg, int count);

}  // namespace gtobench

#endif  // GTOBENCH_EXPERIMENT_HPP
