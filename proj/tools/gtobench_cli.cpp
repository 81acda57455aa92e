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

// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>

#include "gtobench/gtobench.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

int fail(gtob_status st) {
  std::fprintf(stderr, "gtobench: %s: %s\n", gtob_status_name(st),
               gtob_last_error());
  return st == GTOB_ERR_USAGE ? kExitUsage : kExitRuntime;
}

void print_and_free(char* text) {
  std::fputs(text, stdout);
  gtob_string_free(text);
}

int run(gtob_config* cfg) {
  gtob_report* report = nullptr;
  gtob_status st = gtob_run_experiment(cfg, &report);
  if (st != GTOB_OK) return fail(st);
  char* table = nullptr;
  char* paths = nullptr;
  st = gtob_report_render(report, GTOB_FORMAT_MARKDOWN, &table);
  if (st == GTOB_OK) st = gtob_report_emit_all(report, cfg, &paths);
  gtob_report_free(report);
  if (st != GTOB_OK) {
    gtob_string_free(table);
    return fail(st);
  }
  print_and_free(table);
  std::fputs("\nwrote:\n", stdout);
  print_and_free(paths);
  return kExitOk;
}

int train_reference(gtob_config* cfg) {
  char* path = nullptr;
  const gtob_status st = gtob_train_reference(cfg, &path);
  if (st != GTOB_OK) return fail(st);
  std::fputs("wrote: ", stdout);
  print_and_free(path);
  std::fputs("\n", stdout);
  return kExitOk;
}

int export_states(gtob_config* cfg) {
  char* count_text = nullptr;
  gtob_status st = gtob_config_get(cfg, "eval_states", &count_text);
  if (st != GTOB_OK) return fail(st);
  const int count = std::atoi(count_text);
  gtob_string_free(count_text);
  char* paths = nullptr;
  st = gtob_export_states(cfg, count, &paths);
  if (st != GTOB_OK) return fail(st);
  std::fputs("wrote:\n", stdout);
  print_and_free(paths);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  gtob_config* cfg = nullptr;
  gtob_command command = GTOB_CMD_RUN;
  const gtob_status st = gtob_config_from_args(argc, argv, &cfg, &command);
  if (st != GTOB_OK) return fail(st);

  int code = kExitOk;
  switch (command) {
    case GTOB_CMD_HELP:
      print_and_free(gtob_usage());
      break;
    case GTOB_CMD_RUN:
      code = run(cfg);
      break;
    case GTOB_CMD_TRAIN_REFERENCE:
      code = train_reference(cfg);
      break;
    case GTOB_CMD_EXPORT_STATES:
      code = export_states(cfg);
      break;
  }
  gtob_config_free(cfg);
  return code;
}
