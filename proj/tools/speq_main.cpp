// Copyright 2026 The Speq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end of libspeq. Talks to the engine exclusively
// through the C API in speq.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "speq.h"

namespace {

constexpr const char* kUsage =
    "usage:\n"
    "  speq solve <config.json> [--KEY VALUE ...] [--out DIR] [--runs R]\n"
    "  speq oracle <config.json> [--KEY VALUE ...] [--out DIR]\n"
    "  speq plot <report.json> --space strategy|payoff [--out FILE]\n"
    "  speq compare <a.json> <b.json> [--tol T]\n"
    "\n"
    "solve:    run a scenario (mode taken from the config; any config field\n"
    "          can be overridden by its dotted name, e.g. --solver.seed 7).\n"
    "          --runs R executes R runs concurrently with seeds seed..seed+R-1\n"
    "          in per-seed subdirectories of the output directory.\n"
    "oracle:   same as solve with the mode forced to 'oracle'.\n"
    "plot:     render a report to an SVG scatter plot.\n"
    "compare:  match the fronts of two reports under a tolerance\n"
    "          (default: 0.05 for continuous games, exact for discrete).\n";

// 0 on success, 2 for usage/config problems, 3 for resource limits,
// 1 otherwise.
int ExitCode(speq_status status) {
  switch (status) {
    case SPEQ_OK:
      return 0;
    case SPEQ_ERR_INVALID_ARGUMENT:
    case SPEQ_ERR_UNSUPPORTED:
    case SPEQ_ERR_PARSE:
      return 2;
    case SPEQ_ERR_RESOURCE_LIMIT:
      return 3;
    case SPEQ_ERR_IO:
      return 1;
  }
  return 1;
}

int Fail(speq_status status) {
  std::fprintf(stderr, "speq: %s: %s\n", speq_status_name(status),
               speq_last_error());
  return ExitCode(status);
}

int FailUsage(const char* message) {
  std::fprintf(stderr, "speq: %s\n\n%s", message, kUsage);
  return 2;
}

struct Override {
  std::string key;
  std::string value;
};

struct SolveArgs {
  std::string config_path;
  std::vector<Override> overrides;
  std::string out_dir;  // empty = use the config's output_dir
  int runs = 1;
};

// Shared by solve and oracle: one positional config path, then flag pairs.
bool ParseSolveArgs(int argc, char** argv, SolveArgs* args,
                    std::string* error) {
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--", 0) != 0) {
      if (!args->config_path.empty()) {
        *error = "unexpected positional argument '" + arg + "'";
        return false;
      }
      args->config_path = arg;
      continue;
    }
    if (i + 1 >= argc) {
      *error = "flag " + arg + " needs a value";
      return false;
    }
    const std::string value = argv[++i];
    if (arg == "--out") {
      args->out_dir = value;
    } else if (arg == "--runs") {
      args->runs = std::atoi(value.c_str());
      if (args->runs < 1) {
        *error = "--runs wants a positive integer";
        return false;
      }
    } else {
      args->overrides.push_back({arg.substr(2), value});
    }
  }
  if (args->config_path.empty()) {
    *error = "missing config path";
    return false;
  }
  return true;
}

// Builds a fresh scenario handle with all overrides applied.
speq_status MakeScenario(const SolveArgs& args, bool force_oracle,
                         speq_scenario** out) {
  speq_status status = speq_scenario_load(args.config_path.c_str(), out);
  if (status != SPEQ_OK) return status;
  for (const Override& override : args.overrides) {
    status = speq_scenario_set(*out, override.key.c_str(),
                               override.value.c_str());
    if (status != SPEQ_OK) {
      speq_scenario_free(*out);
      *out = nullptr;
      return status;
    }
  }
  if (force_oracle) {
    status = speq_scenario_set(*out, "mode", "oracle");
    if (status != SPEQ_OK) {
      speq_scenario_free(*out);
      *out = nullptr;
      return status;
    }
  }
  return SPEQ_OK;
}

speq_status RunOnce(const SolveArgs& args, bool force_oracle,
                    const char* out_dir, const std::uint64_t* seed_override,
                    speq_run_stats* stats) {
  speq_scenario* scenario = nullptr;
  speq_status status = MakeScenario(args, force_oracle, &scenario);
  if (status != SPEQ_OK) return status;
  if (seed_override) {
    const std::string seed = std::to_string(*seed_override);
    status = speq_scenario_set(scenario, "solver.seed", seed.c_str());
    if (status != SPEQ_OK) {
      speq_scenario_free(scenario);
      return status;
    }
  }
  status = speq_scenario_run(scenario, out_dir, stats);
  speq_scenario_free(scenario);
  return status;
}

void PrintStats(const SolveArgs& args, const speq_run_stats& stats,
                const char* out_dir) {
  std::printf("%s: %zu front rows, seed %llu, %.3f s -> %s\n",
              args.config_path.c_str(), stats.front_rows,
              static_cast<unsigned long long>(stats.seed), stats.wall_seconds,
              out_dir && *out_dir ? out_dir : "(configured output_dir)");
}

int CmdSolve(int argc, char** argv, bool force_oracle) {
  SolveArgs args;
  std::string error;
  if (!ParseSolveArgs(argc, argv, &args, &error)) {
    return FailUsage(error.c_str());
  }

  if (args.runs == 1) {
    const char* out_dir =
        args.out_dir.empty() ? nullptr : args.out_dir.c_str();
    speq_run_stats stats{};
    const speq_status status =
        RunOnce(args, force_oracle, out_dir, nullptr, &stats);
    if (status != SPEQ_OK) return Fail(status);
    PrintStats(args, stats, out_dir);
    return 0;
  }

  // Multi-run mode: resolve the base seed once, then launch isolated runs
  // with consecutive seeds into per-seed subdirectories.
  speq_scenario* probe = nullptr;
  speq_status status = MakeScenario(args, force_oracle, &probe);
  if (status != SPEQ_OK) return Fail(status);
  speq_scenario_free(probe);

  std::uint64_t base_seed = 1;
  for (const Override& override : args.overrides) {
    if (override.key == "solver.seed") {
      base_seed = std::strtoull(override.value.c_str(), nullptr, 10);
    }
  }

  const std::string root = args.out_dir.empty() ? "out/runs" : args.out_dir;
  std::vector<speq_status> results(static_cast<size_t>(args.runs), SPEQ_OK);
  std::vector<std::thread> workers;
  std::mutex print_mutex;
  for (int r = 0; r < args.runs; ++r) {
    workers.emplace_back([&, r] {
      const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(r);
      const std::string dir = root + "/seed_" + std::to_string(seed);
      speq_run_stats stats{};
      const speq_status status =
          RunOnce(args, force_oracle, dir.c_str(), &seed, &stats);
      results[static_cast<size_t>(r)] = status;
      if (status == SPEQ_OK) {
        std::lock_guard<std::mutex> lock(print_mutex);
        PrintStats(args, stats, dir.c_str());
      }
    });
  }
  for (std::thread& worker : workers) worker.join();

  for (speq_status result : results) {
    if (result != SPEQ_OK) return Fail(result);
  }
  return 0;
}

int CmdPlot(int argc, char** argv) {
  std::string report_path;
  std::string space;
  std::string out_path;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--space" && i + 1 < argc) {
      space = argv[++i];
    } else if (arg == "--out" && i + 1 < argc) {
      out_path = argv[++i];
    } else if (arg.rfind("--", 0) != 0 && report_path.empty()) {
      report_path = arg;
    } else {
      return FailUsage(("unexpected argument '" + arg + "'").c_str());
    }
  }
  if (report_path.empty()) return FailUsage("missing report path");
  if (space.empty()) return FailUsage("missing --space strategy|payoff");
  if (out_path.empty()) out_path = space + ".svg";

  const speq_status status =
      speq_report_render_svg(report_path.c_str(), space.c_str(),
                             out_path.c_str());
  if (status != SPEQ_OK) return Fail(status);
  std::printf("wrote %s\n", out_path.c_str());
  return 0;
}

int CmdCompare(int argc, char** argv) {
  std::vector<std::string> paths;
  double tolerance = -1.0;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--tol" && i + 1 < argc) {
      tolerance = std::atof(argv[++i]);
    } else if (arg.rfind("--", 0) != 0) {
      paths.push_back(arg);
    } else {
      return FailUsage(("unexpected argument '" + arg + "'").c_str());
    }
  }
  if (paths.size() != 2) return FailUsage("compare wants two report paths");

  char* summary = nullptr;
  const speq_status status =
      speq_compare_reports(paths[0].c_str(), paths[1].c_str(), tolerance,
                           nullptr, nullptr, nullptr, &summary);
  if (status != SPEQ_OK) return Fail(status);
  std::fputs(summary, stdout);
  speq_string_free(summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fputs(kUsage, stderr);
    return 2;
  }
  const std::string command = argv[1];
  if (command == "solve") return CmdSolve(argc - 2, argv + 2, false);
  if (command == "oracle") return CmdSolve(argc - 2, argv + 2, true);
  if (command == "plot") return CmdPlot(argc - 2, argv + 2);
  if (command == "compare") return CmdCompare(argc - 2, argv + 2);
  if (command == "--help" || command == "-h" || command == "help") {
    std::fputs(kUsage, stdout);
    return 0;
  }
  return FailUsage(("unknown command '" + command + "'").c_str());
}
