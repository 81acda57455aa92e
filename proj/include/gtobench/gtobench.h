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

#ifndef GTOBENCH_GTOBENCH_H
#define GTOBENCH_GTOBENCH_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(GTOBENCH_BUILDING)
#define GTOB_API __declspec(dllexport)
#else
#define GTOB_API __declspec(dllimport)
#endif
#else
#define GTOB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gtob_status {
  GTOB_OK = 0,
  GTOB_ERR_NOT_NORMALIZED = 1,
  GTOB_ERR_NEGATIVE_PROBABILITY = 2,
  GTOB_ERR_DEGENERATE_COUNTS = 3,
  GTOB_ERR_HEADSUP_MODE = 4,
  GTOB_ERR_MULTIWAY_STATE = 5,
  GTOB_ERR_HEADSUP_STATE = 6,
  GTOB_ERR_CONFIG = 7,
  GTOB_ERR_EMPTY_EVAL_SET = 8,
  GTOB_ERR_TOO_FEW_RUNS = 9,
  GTOB_ERR_REFERENCE_MISSING = 10,
  GTOB_ERR_IO = 11,
  GTOB_ERR_EMPTY_REPORT = 12,
  GTOB_ERR_USAGE = 13,
  GTOB_ERR_INVALID_ARGUMENT = 14,
  GTOB_ERR_INTERNAL = 15
} gtob_status;

typedef enum gtob_command {
  GTOB_CMD_RUN = 0,
  GTOB_CMD_TRAIN_REFERENCE = 1,
  GTOB_CMD_EXPORT_STATES = 2,
  GTOB_CMD_HELP = 3
} gtob_command;

typedef enum gtob_format {
  GTOB_FORMAT_CSV = 0,
  GTOB_FORMAT_JSON = 1,
  GTOB_FORMAT_MARKDOWN = 2
} gtob_format;

typedef struct gtob_config gtob_config;
typedef struct gtob_report gtob_report;

// Absent confidence intervals are NaN. `model` lives as long as the report.
typedef struct gtob_metric_row {
  const char* model;
  int players;
  long iters;
  double top1, top1_ci, top1_delta;
  double kl, kl_ci, kl_delta;
  double ce, ce_ci, ce_delta;
  double nashconv;
  int n_states;
  int seeds;
} gtob_metric_row;

// Message of the last failed call on this thread; never NULL.
GTOB_API const char* gtob_last_error(void);
GTOB_API const char* gtob_status_name(gtob_status status);
GTOB_API const char* gtob_version(void);

// Strings returned through `char**` are owned by the caller.
GTOB_API void gtob_string_free(char* s);
GTOB_API char* gtob_usage(void);

GTOB_API gtob_status gtob_config_new(gtob_config** out);
GTOB_API gtob_status gtob_config_from_args(int argc, const char* const* argv,
                                           gtob_config** out,
                                           gtob_command* command);
GTOB_API void gtob_config_free(gtob_config* cfg);
GTOB_API gtob_status gtob_config_set(gtob_config* cfg, const char* key,
                                     const char* value);
GTOB_API gtob_status gtob_config_apply_file(gtob_config* cfg,
                                            const char* path);
GTOB_API gtob_status gtob_config_get(const gtob_config* cfg, const char* key,
                                     char** value);
GTOB_API gtob_status gtob_config_to_text(const gtob_config* cfg, char** text);
GTOB_API gtob_status gtob_config_hash(const gtob_config* cfg, char** hash);

GTOB_API gtob_status gtob_run_experiment(const gtob_config* cfg,
                                         gtob_report** out);
GTOB_API void gtob_report_free(gtob_report* report);
GTOB_API gtob_status gtob_report_render(const gtob_report* report,
                                        gtob_format format, char** text);
GTOB_API gtob_status gtob_report_emit(const gtob_report* report,
                                      gtob_format format, const char* path);
// Writes every configured format into the output directory; `paths` gets one
// path per line.
GTOB_API gtob_status gtob_report_emit_all(const gtob_report* report,
                                          const gtob_config* cfg,
                                          char** paths);
GTOB_API gtob_status gtob_report_row_count(const gtob_report* report,
                                           size_t* count);
GTOB_API gtob_status gtob_report_row(const gtob_report* report, size_t index,
                                     gtob_metric_row* row);

GTOB_API gtob_status gtob_train_reference(const gtob_config* cfg,
                                          char** path);
// Writes states.csv and matrices.csv; `paths` gets one path per line.
GTOB_API gtob_status gtob_export_states(const gtob_config* cfg, int count,
                                        char** paths);

// Per-state helpers. Streets and textures are names ("flop", "monotone").
// `cfg` may be NULL for default parameters.
GTOB_API gtob_status gtob_reference_proxy(const gtob_config* cfg,
                                          const char* street, double equity,
                                          const char* texture, int players,
                                          double probs[3]);
// Row-major [call, raise, fold] x [passive, aggressive].
GTOB_API gtob_status gtob_payoff_matrix(const gtob_config* cfg,
                                        const char* street, double equity,
                                        const char* texture, int players,
                                        double entries[6]);
GTOB_API gtob_status gtob_kl_divergence(const double p[3], const double q[3],
                                        double* out);
GTOB_API gtob_status gtob_cross_entropy(const double q[3], const double p[3],
                                        double* out);

#ifdef __cplusplus
}
#endif

#endif  // GTOBENCH_GTOBENCH_H
