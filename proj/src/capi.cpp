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

#include "speq.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "game.hpp"
#include "oracle.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "scenario.hpp"
#include "solver.hpp"
#include "svg.hpp"

struct speq_game {
  speq::Game impl;
};

struct speq_front {
  speq::EquilibriumSet set;
  int players;
};

struct speq_history {
  speq::RunHistory records;
};

struct speq_scenario {
  speq::ScenarioConfig config;
};

namespace {

thread_local std::string g_last_error;

void SetError(const std::string& message) { g_last_error = message; }

// Runs the body and translates exceptions into status codes.
template <typename Fn>
speq_status Guard(Fn&& body) noexcept {
  try {
    body();
    return SPEQ_OK;
  } catch (const speq::InvalidArgument& e) {
    SetError(e.what());
    return SPEQ_ERR_INVALID_ARGUMENT;
  } catch (const speq::Unsupported& e) {
    SetError(e.what());
    return SPEQ_ERR_UNSUPPORTED;
  } catch (const speq::ResourceLimit& e) {
    SetError(e.what());
    return SPEQ_ERR_RESOURCE_LIMIT;
  } catch (const speq::ParseError& e) {
    SetError(e.what());
    return SPEQ_ERR_PARSE;
  } catch (const speq::IoError& e) {
    SetError(e.what());
    return SPEQ_ERR_IO;
  } catch (const std::bad_alloc&) {
    SetError("out of memory");
    return SPEQ_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    SetError(e.what());
    return SPEQ_ERR_INVALID_ARGUMENT;
  }
}

void RequireArg(bool condition, const char* what) {
  if (!condition) throw speq::InvalidArgument(what);
}

speq::Profile ProfileFrom(const speq_game* game, const double* values) {
  RequireArg(values != nullptr, "profile pointer is NULL");
  return speq::Profile(values, values + game->impl.players());
}

speq_front* NewFront(speq::EquilibriumSet set, int players) {
  return new speq_front{std::move(set), players};
}

speq::Report LoadReport(const char* path) {
  RequireArg(path != nullptr, "report path is NULL");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw speq::IoError(std::string("cannot open report ") + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw speq::ParseError(std::string(path) + ": " + e.what());
  }
  return speq::ReportFromJson(doc);
}

char* CopyString(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

speq_status CreateGame(int players, double channels, double access_cost,
                       speq::ActionSpace space, speq_game** out) {
  return Guard([&] {
    RequireArg(out != nullptr, "output pointer is NULL");
    *out = new speq_game{speq::Game(players, channels, access_cost, space)};
  });
}

}  // namespace

extern "C" {

const char* speq_status_name(speq_status status) {
  switch (status) {
    case SPEQ_OK:
      return "ok";
    case SPEQ_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case SPEQ_ERR_UNSUPPORTED:
      return "unsupported";
    case SPEQ_ERR_RESOURCE_LIMIT:
      return "resource-limit";
    case SPEQ_ERR_PARSE:
      return "parse-error";
    case SPEQ_ERR_IO:
      return "io-error";
  }
  return "unknown";
}

const char* speq_last_error(void) { return g_last_error.c_str(); }

void speq_string_free(char* text) { delete[] text; }

speq_status speq_game_create_continuous(int players, double channels,
                                        double access_cost, speq_game** out) {
  return CreateGame(players, channels, access_cost,
                    speq::ActionSpace::kContinuous, out);
}

speq_status speq_game_create_discrete(int players, double channels,
                                      double access_cost, speq_game** out) {
  return CreateGame(players, channels, access_cost,
                    speq::ActionSpace::kDiscrete, out);
}

void speq_game_free(speq_game* game) { delete game; }

int speq_game_players(const speq_game* game) { return game->impl.players(); }
double speq_game_channels(const speq_game* game) {
  return game->impl.channels();
}
double speq_game_access_cost(const speq_game* game) {
  return game->impl.access_cost();
}
int speq_game_is_discrete(const speq_game* game) {
  return game->impl.discrete() ? 1 : 0;
}

speq_status speq_demand(double total_accessed, double channels, double* out) {
  return Guard([&] {
    RequireArg(out != nullptr, "output pointer is NULL");
    *out = speq::Demand(total_accessed, channels);
  });
}

speq_status speq_game_payoff(const speq_game* game, const double* profile,
                             double* payoffs_out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(payoffs_out != nullptr, "output pointer is NULL");
    const speq::PayoffVector payoffs =
        game->impl.Payoff(ProfileFrom(game, profile));
    std::memcpy(payoffs_out, payoffs.data(), payoffs.size() * sizeof(double));
  });
}

speq_status speq_game_validate_profile(const speq_game* game,
                                       const double* profile) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    game->impl.RequireValid(ProfileFrom(game, profile));
  });
}

speq_status speq_game_analytic_nash(const speq_game* game,
                                    double* profile_out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(profile_out != nullptr, "output pointer is NULL");
    const speq::Profile nash = game->impl.AnalyticNash();
    std::memcpy(profile_out, nash.data(), nash.size() * sizeof(double));
  });
}

speq_status speq_pareto_dominates(const speq_game* game, const double* x,
                                  const double* y, int* result_out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(result_out != nullptr, "output pointer is NULL");
    *result_out = speq::ParetoDominates(game->impl, ProfileFrom(game, x),
                                        ProfileFrom(game, y))
                      ? 1
                      : 0;
  });
}

speq_status speq_relative_efficiency(const speq_game* game,
                                     const char* rationality, const double* x,
                                     const double* y, int* score_out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(rationality != nullptr, "rationality is NULL");
    RequireArg(score_out != nullptr, "output pointer is NULL");
    *score_out = speq::RelativeEfficiency(
        game->impl, speq::Rationality::Parse(rationality),
        ProfileFrom(game, x), ProfileFrom(game, y));
  });
}

speq_status speq_np_dominates(const speq_game* game, const char* rationality,
                              const double* x, const double* y,
                              int* result_out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(rationality != nullptr, "rationality is NULL");
    RequireArg(result_out != nullptr, "output pointer is NULL");
    *result_out =
        speq::NpDominates(game->impl, speq::Rationality::Parse(rationality),
                          ProfileFrom(game, x), ProfileFrom(game, y))
            ? 1
            : 0;
  });
}

size_t speq_front_size(const speq_front* front) { return front->set.size(); }
int speq_front_players(const speq_front* front) { return front->players; }
const char* speq_front_kind(const speq_front* front) {
  return speq::ToString(front->set.kind);
}

speq_status speq_front_profile(const speq_front* front, size_t index,
                               double* profile_out) {
  return Guard([&] {
    RequireArg(front != nullptr, "front is NULL");
    RequireArg(profile_out != nullptr, "output pointer is NULL");
    RequireArg(index < front->set.size(), "front index out of range");
    const speq::Profile& p = front->set.profiles[index];
    std::memcpy(profile_out, p.data(), p.size() * sizeof(double));
  });
}

speq_status speq_front_payoffs(const speq_front* front, size_t index,
                               double* payoffs_out) {
  return Guard([&] {
    RequireArg(front != nullptr, "front is NULL");
    RequireArg(payoffs_out != nullptr, "output pointer is NULL");
    RequireArg(index < front->set.size(), "front index out of range");
    const speq::PayoffVector& u = front->set.payoffs[index];
    std::memcpy(payoffs_out, u.data(), u.size() * sizeof(double));
  });
}

void speq_front_free(speq_front* front) { delete front; }

speq_status speq_exact_nash(const speq_game* game, uint64_t profile_cap,
                            speq_front** out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(out != nullptr, "output pointer is NULL");
    const uint64_t cap =
        profile_cap == 0 ? speq::kDefaultProfileCap : profile_cap;
    *out = NewFront(speq::ExactNash(game->impl, cap), game->impl.players());
  });
}

speq_status speq_exact_front(const speq_game* game, const char* rationality,
                             uint64_t profile_cap, speq_front** out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(rationality != nullptr, "rationality is NULL");
    RequireArg(out != nullptr, "output pointer is NULL");
    const uint64_t cap =
        profile_cap == 0 ? speq::kDefaultProfileCap : profile_cap;
    *out = NewFront(speq::ExactFront(game->impl,
                                     speq::Rationality::Parse(rationality),
                                     cap),
                    game->impl.players());
  });
}

void speq_solver_params_init(speq_solver_params* params) {
  if (!params) return;
  const speq::SolverParams defaults;
  params->population_size = defaults.population_size;
  params->max_generations = defaults.max_generations;
  params->crossover_rate = defaults.crossover_rate;
  params->mutation_rate = defaults.mutation_rate;
  params->crossover_index = defaults.crossover_index;
  params->mutation_index = defaults.mutation_index;
  params->seed = defaults.seed;
}

size_t speq_history_size(const speq_history* history) {
  return history->records.size();
}

speq_status speq_history_record(const speq_history* history, size_t index,
                                int* generation_out, size_t* front_size_out,
                                double* centroid_out, double* spread_out) {
  return Guard([&] {
    RequireArg(history != nullptr, "history is NULL");
    RequireArg(index < history->records.size(), "history index out of range");
    const speq::GenerationRecord& record = history->records[index];
    if (generation_out) *generation_out = record.generation;
    if (front_size_out) *front_size_out = record.front_size;
    if (centroid_out) {
      std::memcpy(centroid_out, record.centroid.data(),
                  record.centroid.size() * sizeof(double));
    }
    if (spread_out) *spread_out = record.spread;
  });
}

void speq_history_free(speq_history* history) { delete history; }

speq_status speq_evolve(const speq_game* game, const char* rationality,
                        const speq_solver_params* params, speq_front** out,
                        speq_history** history_out) {
  return Guard([&] {
    RequireArg(game != nullptr, "game is NULL");
    RequireArg(rationality != nullptr, "rationality is NULL");
    RequireArg(out != nullptr, "output pointer is NULL");
    speq::SolverParams resolved;
    if (params) {
      resolved.population_size = params->population_size;
      resolved.max_generations = params->max_generations;
      resolved.crossover_rate = params->crossover_rate;
      resolved.mutation_rate = params->mutation_rate;
      resolved.crossover_index = params->crossover_index;
      resolved.mutation_index = params->mutation_index;
      resolved.seed = params->seed;
    }
    speq::EvolveResult result =
        speq::Evolve(game->impl, speq::Rationality::Parse(rationality),
                     resolved);
    *out = NewFront(std::move(result.front), game->impl.players());
    if (history_out) {
      *history_out = new speq_history{std::move(result.history)};
    }
  });
}

speq_status speq_scenario_load(const char* path, speq_scenario** out) {
  return Guard([&] {
    RequireArg(path != nullptr, "config path is NULL");
    RequireArg(out != nullptr, "output pointer is NULL");
    *out = new speq_scenario{speq::ScenarioConfig::Load(path)};
  });
}

speq_status speq_scenario_parse(const char* json_text, speq_scenario** out) {
  return Guard([&] {
    RequireArg(json_text != nullptr, "config text is NULL");
    RequireArg(out != nullptr, "output pointer is NULL");
    *out = new speq_scenario{speq::ScenarioConfig::Parse(json_text)};
  });
}

speq_status speq_scenario_set(speq_scenario* scenario, const char* dotted_key,
                              const char* value) {
  return Guard([&] {
    RequireArg(scenario != nullptr, "scenario is NULL");
    RequireArg(dotted_key != nullptr, "override key is NULL");
    RequireArg(value != nullptr, "override value is NULL");
    scenario->config.Set(dotted_key, value);
  });
}

speq_status speq_scenario_run(const speq_scenario* scenario,
                              const char* output_dir, speq_run_stats* stats) {
  return Guard([&] {
    RequireArg(scenario != nullptr, "scenario is NULL");
    const speq::Report report = speq::RunScenario(
        scenario->config, output_dir ? std::string(output_dir) : "");
    if (stats) {
      stats->front_rows = report.rows.size();
      stats->seed = report.seed;
      stats->generations = report.generations;
      stats->wall_seconds = report.wall_seconds;
    }
  });
}

void speq_scenario_free(speq_scenario* scenario) { delete scenario; }

speq_status speq_report_render_svg(const char* report_json_path,
                                   const char* space, const char* out_path) {
  return Guard([&] {
    RequireArg(space != nullptr, "plot space is NULL");
    RequireArg(out_path != nullptr, "output path is NULL");
    const speq::Report report = LoadReport(report_json_path);
    const std::string svg =
        speq::RenderSvg(report, speq::ParsePlotSpace(space));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw speq::IoError(std::string("cannot open ") + out_path +
                          " for writing");
    }
    out << svg;
    if (!out) throw speq::IoError(std::string("failed writing ") + out_path);
  });
}

speq_status speq_compare_reports(const char* report_a_path,
                                 const char* report_b_path, double tolerance,
                                 size_t* matched_out, size_t* only_a_out,
                                 size_t* only_b_out, char** summary_json_out) {
  return Guard([&] {
    const speq::Report a = LoadReport(report_a_path);
    const speq::Report b = LoadReport(report_b_path);
    const speq::CompareSummary summary =
        speq::CompareReports(a, b, tolerance);
    if (matched_out) *matched_out = summary.matched.size();
    if (only_a_out) *only_a_out = summary.only_a.size();
    if (only_b_out) *only_b_out = summary.only_b.size();
    if (summary_json_out) {
      *summary_json_out = CopyString(speq::ToJson(summary).dump(2) + "\n");
    }
  });
}

}  // extern "C"
