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

#ifndef SPEQ_SCENARIO_HPP
#define SPEQ_SCENARIO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "game.hpp"
#include "oracle.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "solver.hpp"

namespace speq {

enum class RunMode {
  kEvolve,  // evolutionary detection only
  kOracle,  // exhaustive grid result only (discrete games)
  kBoth,    // both, plus a diff of the two fronts
};

// A scenario config with every default resolved and validated.
struct ResolvedScenario {
  Game game;
  Rationality rationality;
  SolverParams solver;
  RunMode mode;
  std::string output_dir;
  bool plots;
  double compare_tolerance;  // negative = 0.05 continuous / exact discrete
  std::uint64_t profile_cap;
};

// A scenario document: the JSON config plus dotted-key overrides. Example:
//
//   {
//     "game": {"n": 2, "w": 10.0, "k": 1.0, "kind": "continuous"},
//     "rationality": "N,N",
//     "mode": "evolve",
//     "solver": {"population_size": 100, "max_generations": 100, "seed": 42},
//     "output_dir": "out/nash_2p",
//     "plots": true
//   }
//
// Any field can be overridden with Set("solver.seed", "7") and friends;
// values parse as JSON when possible and fall back to strings.
class ScenarioConfig {
 public:
  static ScenarioConfig Load(const std::string& path);
  static ScenarioConfig Parse(const std::string& json_text);

  void Set(const std::string& dotted_key, const std::string& value);

  // Validates the document and materializes every default. Errors name the
  // offending dotted field.
  ResolvedScenario Resolve() const;

  // The normalized configuration actually used by a run; embedded in
  // reports so results stay traceable to their inputs.
  nlohmann::json Echo() const;

  const nlohmann::json& raw() const { return doc_; }

 private:
  explicit ScenarioConfig(nlohmann::json doc);

  nlohmann::json doc_;
};

// Executes the scenario: evolve and/or oracle, then report.csv,
// report.json, history.csv (evolved runs), plots (2-3 players, when
// enabled) and compare.json (mode both) under the output directory.
// A non-empty `output_dir_override` replaces the configured directory.
Report RunScenario(const ScenarioConfig& config,
                   const std::string& output_dir_override = "");

}  // namespace speq

#endif  // SPEQ_SCENARIO_HPP
