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

#include "scenario.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "svg.hpp"

namespace speq {
namespace {

namespace fs = std::filesystem;

const nlohmann::json* Find(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  return it == doc.end() ? nullptr : &*it;
}

[[noreturn]] void FieldError(const std::string& field,
                             const std::string& what) {
  throw ParseError("config field '" + field + "': " + what);
}

double GetNumber(const nlohmann::json& block, const std::string& prefix,
                 const char* key) {
  const nlohmann::json* value = Find(block, key);
  if (!value) FieldError(prefix + key, "missing");
  if (!value->is_number()) FieldError(prefix + key, "expected a number");
  return value->get<double>();
}

int GetInt(const nlohmann::json& block, const std::string& prefix,
           const char* key) {
  const nlohmann::json* value = Find(block, key);
  if (!value) FieldError(prefix + key, "missing");
  if (!value->is_number_integer()) FieldError(prefix + key,
                                              "expected an integer");
  return value->get<int>();
}

std::string GetString(const nlohmann::json& block, const std::string& prefix,
                      const char* key) {
  const nlohmann::json* value = Find(block, key);
  if (!value) FieldError(prefix + key, "missing");
  if (!value->is_string()) FieldError(prefix + key, "expected a string");
  return value->get<std::string>();
}

void RejectUnknownKeys(const nlohmann::json& block, const std::string& prefix,
                       const std::set<std::string>& allowed) {
  for (const auto& [key, value] : block.items()) {
    if (!allowed.count(key)) {
      FieldError(prefix + key, "unknown field");
    }
  }
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

Report SubReport(const Report& full, const std::string& source) {
  Report sub;
  sub.scenario = full.scenario;
  for (const ReportRow& row : full.rows) {
    if (row.source == source) sub.rows.push_back(row);
  }
  return sub;
}

}  // namespace

ScenarioConfig::ScenarioConfig(nlohmann::json doc) : doc_(std::move(doc)) {
  if (!doc_.is_object()) {
    throw ParseError("scenario config must be a JSON object");
  }
}

ScenarioConfig ScenarioConfig::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ScenarioConfig(nlohmann::json::parse(buffer.str()));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

ScenarioConfig ScenarioConfig::Parse(const std::string& json_text) {
  try {
    return ScenarioConfig(nlohmann::json::parse(json_text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario config: ") + e.what());
  }
}

void ScenarioConfig::Set(const std::string& dotted_key,
                         const std::string& value) {
  if (dotted_key.empty()) throw InvalidArgument("empty override key");
  std::string pointer = "/";
  for (char c : dotted_key) pointer += c == '.' ? '/' : c;
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(value);
  } catch (const nlohmann::json::parse_error&) {
    parsed = value;  // bare words are strings
  }
  doc_[nlohmann::json::json_pointer(pointer)] = std::move(parsed);
}

ResolvedScenario ScenarioConfig::Resolve() const {
  RejectUnknownKeys(doc_, "",
                    {"game", "rationality", "mode", "solver", "output_dir",
                     "plots", "compare_tolerance", "profile_cap"});

  const nlohmann::json* game_block = Find(doc_, "game");
  if (!game_block || !game_block->is_object()) {
    FieldError("game", "missing or not an object");
  }
  RejectUnknownKeys(*game_block, "game.", {"n", "w", "k", "kind"});
  const int n = GetInt(*game_block, "game.", "n");
  const double w = GetNumber(*game_block, "game.", "w");
  const double k = GetNumber(*game_block, "game.", "k");
  const std::string kind = GetString(*game_block, "game.", "kind");
  ActionSpace space;
  if (kind == "continuous") {
    space = ActionSpace::kContinuous;
  } else if (kind == "discrete") {
    space = ActionSpace::kDiscrete;
  } else {
    FieldError("game.kind", "expected 'continuous' or 'discrete', got '" +
                                kind + "'");
  }
  Game game(n, w, k, space);

  const std::string rationality_text = GetString(doc_, "", "rationality");
  Rationality rationality = Rationality::Parse(rationality_text);
  if (rationality.size() != n) {
    FieldError("rationality", "\"" + rationality_text + "\" names " +
                                  std::to_string(rationality.size()) +
                                  " players but game.n is " +
                                  std::to_string(n));
  }

  RunMode mode = RunMode::kEvolve;
  if (const nlohmann::json* mode_value = Find(doc_, "mode")) {
    const std::string text = mode_value->is_string()
                                 ? mode_value->get<std::string>()
                                 : mode_value->dump();
    if (text == "evolve") {
      mode = RunMode::kEvolve;
    } else if (text == "oracle") {
      mode = RunMode::kOracle;
    } else if (text == "both") {
      mode = RunMode::kBoth;
    } else {
      FieldError("mode", "expected evolve, oracle or both, got '" + text +
                             "'");
    }
  }
  if (mode != RunMode::kEvolve && !game.discrete()) {
    FieldError("mode", "oracle results require a discrete game");
  }

  SolverParams solver;
  if (const nlohmann::json* solver_block = Find(doc_, "solver")) {
    if (!solver_block->is_object()) FieldError("solver", "not an object");
    RejectUnknownKeys(*solver_block, "solver.",
                      {"population_size", "max_generations", "crossover_rate",
                       "mutation_rate", "crossover_index", "mutation_index",
                       "seed"});
    if (Find(*solver_block, "population_size")) {
      solver.population_size = GetInt(*solver_block, "solver.",
                                      "population_size");
    }
    if (Find(*solver_block, "max_generations")) {
      solver.max_generations = GetInt(*solver_block, "solver.",
                                      "max_generations");
    }
    if (Find(*solver_block, "crossover_rate")) {
      solver.crossover_rate = GetNumber(*solver_block, "solver.",
                                        "crossover_rate");
    }
    if (Find(*solver_block, "mutation_rate")) {
      solver.mutation_rate = GetNumber(*solver_block, "solver.",
                                       "mutation_rate");
    }
    if (Find(*solver_block, "crossover_index")) {
      solver.crossover_index = GetNumber(*solver_block, "solver.",
                                         "crossover_index");
    }
    if (Find(*solver_block, "mutation_index")) {
      solver.mutation_index = GetNumber(*solver_block, "solver.",
                                        "mutation_index");
    }
    if (Find(*solver_block, "seed")) {
      const nlohmann::json* seed = Find(*solver_block, "seed");
      if (!seed->is_number_unsigned() && !seed->is_number_integer()) {
        FieldError("solver.seed", "expected a non-negative integer");
      }
      solver.seed = seed->get<std::uint64_t>();
    }
  }
  try {
    solver.Validate();
  } catch (const InvalidArgument& e) {
    FieldError("solver", e.what());
  }

  std::string output_dir = "out";
  if (Find(doc_, "output_dir")) {
    output_dir = GetString(doc_, "", "output_dir");
  }
  bool plots = true;
  if (const nlohmann::json* plots_value = Find(doc_, "plots")) {
    if (!plots_value->is_boolean()) FieldError("plots", "expected a boolean");
    plots = plots_value->get<bool>();
  }
  double compare_tolerance = -1.0;
  if (Find(doc_, "compare_tolerance")) {
    compare_tolerance = GetNumber(doc_, "", "compare_tolerance");
  }
  std::uint64_t profile_cap = kDefaultProfileCap;
  if (const nlohmann::json* cap = Find(doc_, "profile_cap")) {
    if (!cap->is_number_unsigned() && !cap->is_number_integer()) {
      FieldError("profile_cap", "expected a non-negative integer");
    }
    profile_cap = cap->get<std::uint64_t>();
  }

  return ResolvedScenario{std::move(game), std::move(rationality), solver,
                          mode,            output_dir,             plots,
                          compare_tolerance, profile_cap};
}

nlohmann::json ScenarioConfig::Echo() const {
  const ResolvedScenario s = Resolve();
  const char* mode = s.mode == RunMode::kEvolve
                         ? "evolve"
                         : s.mode == RunMode::kOracle ? "oracle" : "both";
  return {{"game",
           {{"n", s.game.players()},
            {"w", s.game.channels()},
            {"k", s.game.access_cost()},
            {"kind", s.game.discrete() ? "discrete" : "continuous"}}},
          {"rationality", s.rationality.ToString()},
          {"mode", mode},
          {"solver",
           {{"population_size", s.solver.population_size},
            {"max_generations", s.solver.max_generations},
            {"crossover_rate", s.solver.crossover_rate},
            {"mutation_rate", s.solver.ResolveMutationRate(s.game)},
            {"crossover_index", s.solver.crossover_index},
            {"mutation_index", s.solver.mutation_index},
            {"seed", s.solver.seed}}},
          {"output_dir", s.output_dir},
          {"plots", s.plots},
          {"compare_tolerance", s.compare_tolerance},
          {"profile_cap", s.profile_cap}};
}

Report RunScenario(const ScenarioConfig& config,
                   const std::string& output_dir_override) {
  const ResolvedScenario s = config.Resolve();
  const std::string out_dir =
      output_dir_override.empty() ? s.output_dir : output_dir_override;

  Report report;
  report.scenario = config.Echo();
  report.scenario["output_dir"] = out_dir;
  report.seed = s.solver.seed;

  const auto start = std::chrono::steady_clock::now();

  if (s.mode == RunMode::kEvolve || s.mode == RunMode::kBoth) {
    EvolveResult evolved = Evolve(s.game, s.rationality, s.solver);
    for (size_t i = 0; i < evolved.front.size(); ++i) {
      report.rows.push_back(ReportRow{"evolved", 0, evolved.front.profiles[i],
                                      evolved.front.payoffs[i]});
    }
    report.history = std::move(evolved.history);
    report.generations = s.solver.max_generations;
  }
  if (s.mode == RunMode::kOracle || s.mode == RunMode::kBoth) {
    // The all-Nash oracle is the best-response check itself; any other
    // rationality calls for the full-grid non-dominated front.
    const EquilibriumSet oracle =
        s.rationality.all_nash() ? ExactNash(s.game, s.profile_cap)
                                 : ExactFront(s.game, s.rationality,
                                              s.profile_cap);
    for (size_t i = 0; i < oracle.size(); ++i) {
      report.rows.push_back(
          ReportRow{"oracle", 0, oracle.profiles[i], oracle.payoffs[i]});
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  SortRows(report.rows);

  fs::create_directories(out_dir);
  WriteFile(fs::path(out_dir) / "report.csv", WriteCsv(report));
  WriteFile(fs::path(out_dir) / "report.json", ToJson(report).dump(2) + "\n");
  if (!report.history.empty()) {
    WriteFile(fs::path(out_dir) / "history.csv", WriteHistoryCsv(report));
  }
  if (s.plots && s.game.players() >= 2 && s.game.players() <= 3) {
    const Report& r = report;
    WriteFile(fs::path(out_dir) / "strategy.svg",
              RenderSvg(r, PlotSpace::kStrategy));
    WriteFile(fs::path(out_dir) / "payoff.svg",
              RenderSvg(r, PlotSpace::kPayoff));
  }
  if (s.mode == RunMode::kBoth) {
    const Report evolved = SubReport(report, "evolved");
    const Report oracle = SubReport(report, "oracle");
    CompareSummary diff =
        CompareReports(evolved, oracle, s.compare_tolerance);
    nlohmann::json doc = ToJson(diff);
    doc["a"] = "evolved";
    doc["b"] = "oracle";
    WriteFile(fs::path(out_dir) / "compare.json", doc.dump(2) + "\n");
  }
  return report;
}

}  // namespace speq
