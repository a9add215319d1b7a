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

#ifndef SPEQ_REPORT_HPP
#define SPEQ_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "game.hpp"
#include "solver.hpp"

namespace speq {

// One detected equilibrium point: where it came from, its profile and the
// payoffs it earns.
struct ReportRow {
  std::string source;  // "oracle" or "evolved"
  int rank = 0;
  Profile profile;
  PayoffVector payoffs;

  bool operator==(const ReportRow& other) const = default;
};

// The full outcome of a scenario run: the scenario echo, the detected
// front(s) and run metadata.
struct Report {
  nlohmann::json scenario;  // resolved configuration the run used
  std::vector<ReportRow> rows;
  std::uint64_t seed = 0;
  int generations = 0;  // generations executed; 0 for oracle-only runs
  double wall_seconds = 0.0;
  RunHistory history;  // empty unless the run evolved
};

// Number of players the report describes (from the scenario echo).
int ReportPlayers(const Report& report);

// Rows ordered by profile (lexicographic), then source, then rank.
void SortRows(std::vector<ReportRow>& rows);

// Round-trip double formatting (17 significant digits).
std::string FormatDouble(double value);

// CSV with header `source,rank,c_1..c_n,u_1..u_n` and one row per front
// point. Byte-deterministic for a given report.
std::string WriteCsv(const Report& report);

// Parses rows back out of WriteCsv output; numeric fields recover exactly.
std::vector<ReportRow> ParseCsvRows(const std::string& csv);

nlohmann::json ToJson(const Report& report);
Report ReportFromJson(const nlohmann::json& doc);

// Per-generation trace as CSV: generation,front_size,centroid_c_*,spread.
std::string WriteHistoryCsv(const Report& report);

// Outcome of matching two fronts point-by-point under a max-coordinate
// tolerance. Row indices refer to the input reports; a row of one report
// is "only" when no row of the other lies within the tolerance.
struct CompareSummary {
  double tolerance = 0.0;
  std::vector<std::pair<size_t, size_t>> matched;  // (row in a, row in b)
  std::vector<size_t> only_a;
  std::vector<size_t> only_b;
};

// Throws InvalidArgument when the two reports describe different games.
// A negative tolerance resolves to 0.05 for continuous games and exact
// matching for discrete ones.
CompareSummary CompareReports(const Report& a, const Report& b,
                              double tolerance);

nlohmann::json ToJson(const CompareSummary& summary);

}  // namespace speq

#endif  // SPEQ_REPORT_HPP
