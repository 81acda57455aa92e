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

#include "gtobench/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

namespace gtobench {

std::string_view to_string(Mode m) {
  return m == Mode::kHeadsUp ? "headsup" : "multiway";
}

std::string_view to_string(ReferenceKind r) {
  switch (r) {
    case ReferenceKind::kAuto: return "auto";
    case ReferenceKind::kProxy: return "proxy";
    case ReferenceKind::kMccfrReference: return "mccfr_reference";
  }
  return "?";
}

std::string_view to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kJson: return "json";
    case ReportFormat::kMarkdown: return "markdown";
  }
  return "?";
}

ReferenceKind ExperimentConfig::resolved_reference() const {
  if (reference != ReferenceKind::kAuto) return reference;
  return mode == Mode::kHeadsUp ? ReferenceKind::kMccfrReference
                                : ReferenceKind::kProxy;
}

namespace {

[[noreturn]] void config_error(std::string_view key, const std::string& why) {
  throw Error(ErrorCode::kConfigError, std::string(key) + ": " + why);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string_view::npos ? s.size() : comma;
    out.push_back(trim(s.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  const std::string s = trim(v);
  char* end = nullptr;
  errno = 0;
  const double d = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || errno == ERANGE) {
    config_error(key, "expected a number, got '" + s + "'");
  }
  return d;
}

long long parse_int(std::string_view key, std::string_view v) {
  const std::string s = trim(v);
  char* end = nullptr;
  errno = 0;
  const long long n = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || errno == ERANGE) {
    config_error(key, "expected an integer, got '" + s + "'");
  }
  return n;
}

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
  const std::string s = trim(v);
  char* end = nullptr;
  errno = 0;
  const unsigned long long n = std::strtoull(s.c_str(), &end, 10);
  if (s.empty() || s[0] == '-' || *end != '\0' || errno == ERANGE) {
    config_error(key, "expected an unsigned integer, got '" + s + "'");
  }
  return n;
}

bool parse_bool(std::string_view key, std::string_view v) {
  const std::string s = trim(v);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  config_error(key, "expected true/false, got '" + s + "'");
}

template <std::size_t N>
std::array<double, N> parse_array(std::string_view key, std::string_view v) {
  const auto parts = split_list(v);
  if (parts.size() != N) {
    config_error(key, "expected " + std::to_string(N) + " comma-separated values");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = parse_double(key, parts[i]);
  return out;
}

std::string fmt_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

template <std::size_t N>
std::string fmt_array(const std::array<double, N>& a) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ',';
    out += fmt_double(a[i]);
  }
  return out;
}

struct Field {
  std::string key;
  std::function<void(ExperimentConfig&, std::string_view)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

#define GTOB_DOUBLE(KEY, MEMBER)                                            \
  Field {                                                                   \
    KEY,                                                                    \
        [](ExperimentConfig& c, std::string_view v) {                       \
          c.MEMBER = parse_double(KEY, v);                                  \
        },                                                                  \
        [](const ExperimentConfig& c) { return fmt_double(c.MEMBER); }      \
  }
#define GTOB_INT(KEY, MEMBER, TYPE)                                         \
  Field {                                                                   \
    KEY,                                                                    \
        [](ExperimentConfig& c, std::string_view v) {                       \
          c.MEMBER = static_cast<TYPE>(parse_int(KEY, v));                  \
        },                                                                  \
        [](const ExperimentConfig& c) { return std::to_string(c.MEMBER); }  \
  }
#define GTOB_ARRAY(KEY, MEMBER, N)                                          \
  Field {                                                                   \
    KEY,                                                                    \
        [](ExperimentConfig& c, std::string_view v) {                       \
          c.MEMBER = parse_array<N>(KEY, v);                                \
        },                                                                  \
        [](const ExperimentConfig& c) { return fmt_array(c.MEMBER); }       \
  }

std::vector<Field> build_fields() {
  std::vector<Field> f = {
      Field{"mode",
            [](ExperimentConfig& c, std::string_view v) {
              const std::string s = trim(v);
              if (s == "headsup") c.mode = Mode::kHeadsUp;
              else if (s == "multiway") c.mode = Mode::kMultiway;
              else config_error("mode", "expected headsup|multiway, got '" + s + "'");
              c.generator.headsup = c.mode == Mode::kHeadsUp;
            },
            [](const ExperimentConfig& c) { return std::string(to_string(c.mode)); }},
      Field{"models",
            [](ExperimentConfig& c, std::string_view v) {
              std::vector<PolicyKind> models;
              for (const auto& name : split_list(v)) {
                try {
                  models.push_back(parse_policy_kind(name));
                } catch (const Error& e) {
                  config_error("models", e.what());
                }
              }
              c.models = std::move(models);
            },
            [](const ExperimentConfig& c) {
              std::string out;
              for (std::size_t i = 0; i < c.models.size(); ++i) {
                if (i) out += ',';
                out += to_string(c.models[i]);
              }
              return out;
            }},
      GTOB_INT("iters", iters, long),
      GTOB_INT("eval_states", eval_states, int),
      GTOB_INT("seeds", seeds, int),
      Field{"reference",
            [](ExperimentConfig& c, std::string_view v) {
              const std::string s = trim(v);
              if (s == "auto") c.reference = ReferenceKind::kAuto;
              else if (s == "proxy") c.reference = ReferenceKind::kProxy;
              else if (s == "mccfr_reference" || s == "mccfr")
                c.reference = ReferenceKind::kMccfrReference;
              else
                config_error("reference",
                             "expected auto|proxy|mccfr_reference, got '" + s + "'");
            },
            [](const ExperimentConfig& c) {
              return std::string(to_string(c.reference));
            }},
      GTOB_INT("reference_iters", reference_iters, long),
      Field{"master_seed",
            [](ExperimentConfig& c, std::string_view v) {
              c.master_seed = parse_u64("master_seed", v);
            },
            [](const ExperimentConfig& c) { return std::to_string(c.master_seed); }},
      Field{"output_dir",
            [](ExperimentConfig& c, std::string_view v) { c.output_dir = trim(v); },
            [](const ExperimentConfig& c) { return c.output_dir; }},
      Field{"rng_algorithm",
            [](ExperimentConfig& c, std::string_view v) { c.rng_algorithm = trim(v); },
            [](const ExperimentConfig& c) { return c.rng_algorithm; }},
      GTOB_INT("threads", threads, int),
      Field{"formats",
            [](ExperimentConfig& c, std::string_view v) {
              std::vector<ReportFormat> formats;
              for (const auto& name : split_list(v)) {
                if (name == "csv") formats.push_back(ReportFormat::kCsv);
                else if (name == "json") formats.push_back(ReportFormat::kJson);
                else if (name == "markdown" || name == "md")
                  formats.push_back(ReportFormat::kMarkdown);
                else config_error("formats", "unknown format '" + name + "'");
              }
              c.formats = std::move(formats);
            },
            [](const ExperimentConfig& c) {
              std::string out;
              for (std::size_t i = 0; i < c.formats.size(); ++i) {
                if (i) out += ',';
                out += to_string(c.formats[i]);
              }
              return out;
            }},

      GTOB_ARRAY("generator.street_weights", generator.street_weights, 4),
      GTOB_ARRAY("generator.equity_alpha", generator.equity_alpha, 4),
      GTOB_ARRAY("generator.player_count_weights", generator.player_count_weights, 4),
      Field{"generator.multiway_equity",
            [](ExperimentConfig& c, std::string_view v) {
              const std::string s = trim(v);
              if (s == "transform") c.generator.multiway_equity = MultiwayEquityMode::kTransform;
              else if (s == "monte_carlo")
                c.generator.multiway_equity = MultiwayEquityMode::kMonteCarlo;
              else
                config_error("generator.multiway_equity",
                             "expected transform|monte_carlo, got '" + s + "'");
            },
            [](const ExperimentConfig& c) {
              return std::string(c.generator.multiway_equity == MultiwayEquityMode::kTransform
                                     ? "transform"
                                     : "monte_carlo");
            }},
      GTOB_INT("generator.monte_carlo_trials", generator.monte_carlo_trials, int),

      GTOB_DOUBLE("proxy.raise_slope", proxy.raise_slope),
      GTOB_DOUBLE("proxy.raise_threshold", proxy.raise_threshold),
      GTOB_DOUBLE("proxy.fold_slope", proxy.fold_slope),
      GTOB_DOUBLE("proxy.fold_threshold", proxy.fold_threshold),
      GTOB_DOUBLE("proxy.call_base_weight", proxy.call_base_weight),
      GTOB_DOUBLE("proxy.multiway_tighten_per_player", proxy.multiway_tighten_per_player),

      GTOB_ARRAY("game.bet_by_street", game.bet_by_street, 4),
      GTOB_DOUBLE("game.fold_equity", game.fold_equity),
      GTOB_DOUBLE("game.fold_cost", game.fold_cost),
      GTOB_ARRAY("game.texture_fold_equity_adjust", game.texture_fold_equity_adjust, 6),

      GTOB_INT("learners.equity_buckets", learners.equity_buckets, int),
      GTOB_DOUBLE("learners.mccfr_exploration", learners.mccfr_exploration),

      GTOB_INT("approximator.input_width", approximator.input_width, int),
      GTOB_INT("approximator.hidden_width", approximator.hidden_width, int),
      GTOB_INT("approximator.hidden_layers", approximator.hidden_layers, int),
      GTOB_INT("approximator.output_width", approximator.output_width, int),
      GTOB_DOUBLE("approximator.learning_rate", approximator.learning_rate),
      GTOB_INT("approximator.batch_size", approximator.batch_size, int),
      GTOB_INT("approximator.buffer_capacity", approximator.buffer_capacity, int),

      GTOB_DOUBLE("nfsp.anticipatory", nfsp.anticipatory),
      GTOB_DOUBLE("nfsp.rl_learning_rate", nfsp.rl_learning_rate),
      GTOB_DOUBLE("nfsp.sl_learning_rate", nfsp.sl_learning_rate),
      GTOB_DOUBLE("nfsp.epsilon_start", nfsp.epsilon_start),
      GTOB_DOUBLE("nfsp.epsilon_end", nfsp.epsilon_end),
      Field{"nfsp.use_approximator",
            [](ExperimentConfig& c, std::string_view v) {
              c.nfsp.use_approximator = parse_bool("nfsp.use_approximator", v);
            },
            [](const ExperimentConfig& c) {
              return std::string(c.nfsp.use_approximator ? "true" : "false");
            }},
  };
  for (Street s : kAllStreets) {
    const std::string key = "proxy.street_adjust." + std::string(to_string(s));
    const auto idx = static_cast<std::size_t>(s);
    f.push_back(Field{
        key,
        [key, idx](ExperimentConfig& c, std::string_view v) {
          c.proxy.street_adjust[idx] = parse_array<3>(key, v);
        },
        [idx](const ExperimentConfig& c) { return fmt_array(c.proxy.street_adjust[idx]); }});
  }
  for (Texture t : kAllTextures) {
    const std::string key = "proxy.texture_adjust." + std::string(to_string(t));
    const auto idx = static_cast<std::size_t>(t);
    f.push_back(Field{
        key,
        [key, idx](ExperimentConfig& c, std::string_view v) {
          c.proxy.texture_adjust[idx] = parse_array<3>(key, v);
        },
        [idx](const ExperimentConfig& c) { return fmt_array(c.proxy.texture_adjust[idx]); }});
  }
  return f;
}

#undef GTOB_DOUBLE
#undef GTOB_INT
#undef GTOB_ARRAY

const std::vector<Field>& fields() {
  static const std::vector<Field> table = build_fields();
  return table;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kConfigError, why);
  };
  if (cfg.iters < 1) fail("iters must be at least 1");
  if (cfg.eval_states < 1) fail("eval_states must be at least 1");
  if (cfg.seeds < 1) fail("seeds must be at least 1");
  if (cfg.reference_iters < 0) fail("reference_iters must be >= 0");
  if (cfg.threads < 0) fail("threads must be >= 0");
  if (cfg.models.empty()) fail("models must name at least one policy");
  if (std::set<PolicyKind>(cfg.models.begin(), cfg.models.end()).size() !=
      cfg.models.size()) {
    fail("models lists a policy twice");
  }
  if (cfg.formats.empty()) fail("formats must name at least one format");
  if (cfg.rng_algorithm != kRngAlgorithm) {
    fail("unsupported rng_algorithm '" + cfg.rng_algorithm + "' (only " +
         std::string(kRngAlgorithm) + ")");
  }
  if (cfg.mode == Mode::kMultiway &&
      cfg.reference == ReferenceKind::kMccfrReference) {
    fail("reference=mccfr_reference is only available in headsup mode");
  }
  if (cfg.generator.headsup != (cfg.mode == Mode::kHeadsUp)) {
    fail("generator.headsup disagrees with mode");
  }
  if (cfg.output_dir.empty()) fail("output_dir must not be empty");
  validate(cfg.generator);
  validate(cfg.proxy);
  validate(cfg.game);
  validate(cfg.learners);
  validate(cfg.approximator);
  validate(cfg.nfsp);
}

void apply_setting(ExperimentConfig& cfg, std::string_view key,
                   std::string_view value) {
  const std::string k = trim(key);
  for (const auto& field : fields()) {
    if (field.key == k) {
      field.set(cfg, value);
      return;
    }
  }
  throw Error(ErrorCode::kConfigError, "unknown config key '" + k + "'");
}

void apply_config_text(ExperimentConfig& cfg, std::string_view text,
                       std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfigError, std::string(origin) + ":" +
                                               std::to_string(lineno) +
                                               ": expected 'key = value'");
    }
    try {
      apply_setting(cfg, body.substr(0, eq), body.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfigError, std::string(origin) + ":" +
                                               std::to_string(lineno) + ": " +
                                               e.what());
    }
  }
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ExperimentConfig cfg;
  apply_config_text(cfg, ss.str(), path);
  return cfg;
}

std::map<std::string, std::string> to_config_map(const ExperimentConfig& cfg) {
  std::map<std::string, std::string> out;
  for (const auto& field : fields()) out[field.key] = field.get(cfg);
  return out;
}

std::string to_config_text(const ExperimentConfig& cfg) {
  std::string out;
  for (const auto& field : fields()) {
    out += field.key + " = " + field.get(cfg) + "\n";
  }
  return out;
}

std::string config_hash(const ExperimentConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(to_config_text(cfg))));
  return buf;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct CliOptions {
  std::string command;
  std::string config_path;
  std::vector<std::string> sets;
  std::string mode, models, reference, out, formats;
  long iters = 0;
  int seeds = 0;
  int states = 0;
  int threads = -1;
  std::uint64_t seed = 0;
};

void build_app(CLI::App& app, CliOptions& o) {
  app.description(
      "Benchmark regret-minimization policies against GTO-proxy references "
      "on synthetic NLHE decision states.");
  app.add_option("command", o.command,
                 "run (default) | train-reference | export-states")
      ->check(CLI::IsMember({"run", "train-reference", "export-states"}));
  app.add_option("--config", o.config_path, "key = value config file");
  app.add_option("--set", o.sets, "override one config key (KEY=VALUE)");
  app.add_option("--mode", o.mode, "headsup | multiway");
  app.add_option("--models", o.models,
                 "comma list of cfr,mccfr,deepcfr,nfsp,random");
  app.add_option("--iters", o.iters, "training iterations per model");
  app.add_option("--seeds", o.seeds, "independent runs per model");
  app.add_option("--states", o.states,
                 "evaluation states per run (rows for export-states)");
  app.add_option("--reference", o.reference, "auto | proxy | mccfr_reference");
  app.add_option("--seed", o.seed, "master seed");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--format", o.formats, "comma list of csv,json,markdown");
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

[[noreturn]] void usage_error(const std::string& why) {
  throw Error(ErrorCode::kUsageError, why + "\n\n" + usage_text());
}

}  // namespace

std::string usage_text() {
  CLI::App app{"", "gtobench"};
  CliOptions o;
  build_app(app, o);
  return app.help();
}

CliRequest parse_cli(int argc, const char* const* argv) {
  CLI::App app{"", "gtobench"};
  CliOptions o;
  build_app(app, o);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    CliRequest req;
    req.command = Command::kHelp;
    return req;
  } catch (const CLI::ParseError& e) {
    usage_error(e.what());
  }

  CliRequest req;
  if (o.command == "train-reference") req.command = Command::kTrainReference;
  else if (o.command == "export-states") req.command = Command::kExportStates;

  if (app.count("--iters") && o.iters < 1) usage_error("--iters must be >= 1");
  if (app.count("--seeds") && o.seeds < 1) usage_error("--seeds must be >= 1");
  if (app.count("--states") && o.states < 1) usage_error("--states must be >= 1");
  if (app.count("--threads") && o.threads < 0) usage_error("--threads must be >= 0");

  ExperimentConfig& cfg = req.config;
  try {
    if (!o.config_path.empty()) cfg = load_config_file(o.config_path);
    for (const auto& kv : o.sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) usage_error("--set expects KEY=VALUE");
      apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (const char* env = std::getenv("GTO_BENCH_OUT"); env && *env) {
      cfg.output_dir = env;
    }
    if (app.count("--mode")) apply_setting(cfg, "mode", o.mode);
    if (app.count("--models")) apply_setting(cfg, "models", o.models);
    if (app.count("--iters")) cfg.iters = o.iters;
    if (app.count("--seeds")) cfg.seeds = o.seeds;
    if (app.count("--states")) cfg.eval_states = o.states;
    if (app.count("--reference")) apply_setting(cfg, "reference", o.reference);
    if (app.count("--seed")) cfg.master_seed = o.seed;
    if (app.count("--out")) cfg.output_dir = o.out;
    if (app.count("--format")) apply_setting(cfg, "formats", o.formats);
    if (app.count("--threads")) cfg.threads = o.threads;
    validate(cfg);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kUsageError) throw;
    usage_error(e.what());
  }
  return req;
}

}  // namespace gtobench
