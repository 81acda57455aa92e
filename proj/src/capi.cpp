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

#include "gtobench/gtobench.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gtobench/config.hpp"
#include "gtobench/experiment.hpp"
#include "gtobench/metrics.hpp"
#include "gtobench/proxy.hpp"

struct gtob_config {
  gtobench::ExperimentConfig cfg;
};

struct gtob_report {
  gtobench::EvalReport report;
  std::vector<std::string> model_names;
};

namespace {

using gtobench::ErrorCode;

thread_local std::string g_last_error;

gtob_status to_status(ErrorCode code) {
  return static_cast<gtob_status>(static_cast<int>(code) + 1);
}

template <typename F>
gtob_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return GTOB_OK;
  } catch (const gtobench::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GTOB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GTOB_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return GTOB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw gtobench::Error(ErrorCode::kInvalidArgument,
                          std::string(name) + " must not be NULL");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string join_lines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + "\n";
  return out;
}

gtobench::ReportFormat to_format(gtob_format f) {
  switch (f) {
    case GTOB_FORMAT_CSV: return gtobench::ReportFormat::kCsv;
    case GTOB_FORMAT_JSON: return gtobench::ReportFormat::kJson;
    case GTOB_FORMAT_MARKDOWN: return gtobench::ReportFormat::kMarkdown;
  }
  throw gtobench::Error(ErrorCode::kInvalidArgument, "unknown report format");
}

gtobench::DecisionState make_state(const char* street, double equity,
                                   const char* texture, int players) {
  require(street, "street");
  require(texture, "texture");
  gtobench::DecisionState x;
  x.street = gtobench::parse_street(street);
  x.texture = gtobench::parse_texture(texture);
  x.equity = equity;
  x.players = players;
  gtobench::validate_state(x);
  return x;
}

gtobench::ActionDistribution make_dist(const double p[3]) {
  require(p, "distribution");
  return gtobench::ActionDistribution::from_probabilities(p[0], p[1], p[2]);
}

double ci_or_nan(const std::optional<double>& v) {
  return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

extern "C" {

const char* gtob_last_error(void) { return g_last_error.c_str(); }

const char* gtob_status_name(gtob_status status) {
  if (status == GTOB_OK) return "Ok";
  if (status == GTOB_ERR_INTERNAL) return "Internal";
  if (status > GTOB_OK && status < GTOB_ERR_INTERNAL) {
    return gtobench::error_code_name(static_cast<ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

const char* gtob_version(void) { return "1.0.0"; }

void gtob_string_free(char* s) { std::free(s); }

char* gtob_usage(void) {
  try {
    return dup_string(gtobench::usage_text());
  } catch (...) {
    return nullptr;
  }
}

gtob_status gtob_config_new(gtob_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new gtob_config();
  });
}

gtob_status gtob_config_from_args(int argc, const char* const* argv,
                                  gtob_config** out, gtob_command* command) {
  return guarded([&] {
    require(out, "out");
    require(command, "command");
    *out = nullptr;
    gtobench::CliRequest req = gtobench::parse_cli(argc, argv);
    *command = static_cast<gtob_command>(req.command);
    *out = new gtob_config{std::move(req.config)};
  });
}

void gtob_config_free(gtob_config* cfg) { delete cfg; }

gtob_status gtob_config_set(gtob_config* cfg, const char* key,
                            const char* value) {
  return guarded([&] {
    require(cfg, "cfg");
    require(key, "key");
    require(value, "value");
    gtobench::ExperimentConfig next = cfg->cfg;
    gtobench::apply_setting(next, key, value);
    cfg->cfg = std::move(next);
  });
}

gtob_status gtob_config_apply_file(gtob_config* cfg, const char* path) {
  return guarded([&] {
    require(cfg, "cfg");
    require(path, "path");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw gtobench::Error(ErrorCode::kIoError,
                            std::string("cannot read config file ") + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    gtobench::ExperimentConfig next = cfg->cfg;
    gtobench::apply_config_text(next, text.str(), path);
    cfg->cfg = std::move(next);
  });
}

gtob_status gtob_config_get(const gtob_config* cfg, const char* key,
                            char** value) {
  return guarded([&] {
    require(cfg, "cfg");
    require(key, "key");
    require(value, "value");
    const auto map = gtobench::to_config_map(cfg->cfg);
    const auto it = map.find(key);
    if (it == map.end()) {
      throw gtobench::Error(ErrorCode::kConfigError,
                            std::string("unknown config key '") + key + "'");
    }
    *value = dup_string(it->second);
  });
}

gtob_status gtob_config_to_text(const gtob_config* cfg, char** text) {
  return guarded([&] {
    require(cfg, "cfg");
    require(text, "text");
    *text = dup_string(gtobench::to_config_text(cfg->cfg));
  });
}

gtob_status gtob_config_hash(const gtob_config* cfg, char** hash) {
  return guarded([&] {
    require(cfg, "cfg");
    require(hash, "hash");
    *hash = dup_string(gtobench::config_hash(cfg->cfg));
  });
}

gtob_status gtob_run_experiment(const gtob_config* cfg, gtob_report** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = nullptr;
    auto r = std::make_unique<gtob_report>();
    r->report = gtobench::run_experiment(cfg->cfg);
    for (const auto& row : r->report.rows) {
      r->model_names.emplace_back(gtobench::to_string(row.model));
    }
    *out = r.release();
  });
}

void gtob_report_free(gtob_report* report) { delete report; }

gtob_status gtob_report_render(const gtob_report* report, gtob_format format,
                               char** text) {
  return guarded([&] {
    require(report, "report");
    require(text, "text");
    *text = dup_string(gtobench::render_report(report->report, to_format(format)));
  });
}

gtob_status gtob_report_emit(const gtob_report* report, gtob_format format,
                             const char* path) {
  return guarded([&] {
    require(report, "report");
    require(path, "path");
    gtobench::emit_report(report->report, to_format(format), path);
  });
}

gtob_status gtob_report_emit_all(const gtob_report* report,
                                 const gtob_config* cfg, char** paths) {
  return guarded([&] {
    require(report, "report");
    require(cfg, "cfg");
    require(paths, "paths");
    *paths = dup_string(join_lines(gtobench::emit_reports(report->report, cfg->cfg)));
  });
}

gtob_status gtob_report_row_count(const gtob_report* report, size_t* count) {
  return guarded([&] {
    require(report, "report");
    require(count, "count");
    *count = report->report.rows.size();
  });
}

gtob_status gtob_report_row(const gtob_report* report, size_t index,
                            gtob_metric_row* row) {
  return guarded([&] {
    require(report, "report");
    require(row, "row");
    if (index >= report->report.rows.size()) {
      throw gtobench::Error(ErrorCode::kInvalidArgument, "row index out of range");
    }
    const gtobench::MetricRow& r = report->report.rows[index];
    row->model = report->model_names[index].c_str();
    row->players = r.players;
    row->iters = r.iters;
    row->top1 = r.top1.mean;
    row->top1_ci = ci_or_nan(r.top1.ci);
    row->top1_delta = r.top1.delta;
    row->kl = r.kl.mean;
    row->kl_ci = ci_or_nan(r.kl.ci);
    row->kl_delta = r.kl.delta;
    row->ce = r.ce.mean;
    row->ce_ci = ci_or_nan(r.ce.ci);
    row->ce_delta = r.ce.delta;
    row->nashconv = r.nashconv.mean;
    row->n_states = r.n_states;
    row->seeds = r.seeds;
  });
}

gtob_status gtob_train_reference(const gtob_config* cfg, char** path) {
  return guarded([&] {
    require(cfg, "cfg");
    require(path, "path");
    *path = dup_string(gtobench::train_reference(cfg->cfg));
  });
}

gtob_status gtob_export_states(const gtob_config* cfg, int count,
                               char** paths) {
  return guarded([&] {
    require(cfg, "cfg");
    require(paths, "paths");
    *paths = dup_string(join_lines(gtobench::export_states(cfg->cfg, count)));
  });
}

gtob_status gtob_reference_proxy(const gtob_config* cfg, const char* street,
                                 double equity, const char* texture,
                                 int players, double probs[3]) {
  return guarded([&] {
    require(probs, "probs");
    const gtobench::ProxyParams params =
        cfg != nullptr ? cfg->cfg.proxy : gtobench::ProxyParams{};
    const auto q = gtobench::reference_proxy(
        make_state(street, equity, texture, players), params);
    for (std::size_t i = 0; i < 3; ++i) probs[i] = q.probs()[i];
  });
}

gtob_status gtob_payoff_matrix(const gtob_config* cfg, const char* street,
                               double equity, const char* texture, int players,
                               double entries[6]) {
  return guarded([&] {
    require(entries, "entries");
    const gtobench::GameParams params =
        cfg != nullptr ? cfg->cfg.game : gtobench::GameParams{};
    const auto m = gtobench::payoff_matrix(
        make_state(street, equity, texture, players), params);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 2; ++c) entries[2 * r + c] = m.at(r, c);
    }
  });
}

gtob_status gtob_kl_divergence(const double p[3], const double q[3],
                               double* out) {
  return guarded([&] {
    require(out, "out");
    *out = gtobench::kl_divergence(make_dist(p), make_dist(q));
  });
}

gtob_status gtob_cross_entropy(const double q[3], const double p[3],
                               double* out) {
  return guarded([&] {
    require(out, "out");
    *out = gtobench::cross_entropy(make_dist(q), make_dist(p));
  });
}

}  // extern "C"
