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

#ifndef GTOBENCH_CONFIG_HPP
#define GTOBENCH_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gtobench/approximator.hpp"
#include "gtobench/game.hpp"
#include "gtobench/learners.hpp"
#include "gtobench/proxy.hpp"
#include "gtobench/state_gen.hpp"

namespace gtobench {

enum class Mode { kHeadsUp, kMultiway };
// kAuto picks the trained MCCFR reference heads-up and the closed-form
// proxy multiway.
enum class ReferenceKind { kAuto, kProxy, kMccfrReference };
enum class ReportFormat { kCsv, kJson, kMarkdown };

std::string_view to_string(Mode m);
std::string_view to_string(ReferenceKind r);
std::string_view to_string(ReportFormat f);

struct ExperimentConfig {
  Mode mode = Mode::kHeadsUp;
  std::vector<PolicyKind> models = {kAllPolicyKinds.begin(), kAllPolicyKinds.end()};
  long iters = 500;
  int eval_states = 2000;
  int seeds = 5;
  ReferenceKind reference = ReferenceKind::kAuto;
  long reference_iters = 200000;
  std::uint64_t master_seed = 20251;
  std::string output_dir = "gtobench-out";
  std::string rng_algorithm = std::string(kRngAlgorithm);
  // Worker threads for (seed) cells; 0 uses the hardware concurrency.
  int threads = 0;
  std::vector<ReportFormat> formats = {ReportFormat::kCsv, ReportFormat::kJson,
                                       ReportFormat::kMarkdown};

  GeneratorConfig generator;
  ProxyParams proxy;
  GameParams game;
  LearnerOptions learners;
  ApproximatorSpec approximator;
  NfspParams nfsp;

  ReferenceKind resolved_reference() const;
  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Throws kConfigError on any violated invariant.
void validate(const ExperimentConfig& cfg);

// Assigns one `section.key = value` setting. Throws kConfigError on unknown
// keys or unparseable values.
void apply_setting(ExperimentConfig& cfg, std::string_view key,
                   std::string_view value);

// Reads a flat key-value file: `key = value` lines, `#` comments, blank
// lines ignored.
void apply_config_text(ExperimentConfig& cfg, std::string_view text,
                       std::string_view origin = "<config>");
ExperimentConfig load_config_file(const std::string& path);

// Canonical rendering; apply_config_text(to_config_text(c)) reproduces c.
std::string to_config_text(const ExperimentConfig& cfg);
std::map<std::string, std::string> to_config_map(const ExperimentConfig& cfg);
// FNV-1a of the canonical text, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

enum class Command { kRun, kTrainReference, kExportStates, kHelp };

struct CliRequest {
  Command command = Command::kRun;
  ExperimentConfig config;
};

std::string usage_text();

// Layering: defaults, then --config file, then --set overrides, then
// GTO_BENCH_OUT for the output directory, then the named flags. Throws
// kUsageError (message includes the synopsis) on bad input.
CliRequest parse_cli(int argc, const char* const* argv);

}  // namespace gtobench

#endif  // GTOBENCH_CONFIG_HPP
