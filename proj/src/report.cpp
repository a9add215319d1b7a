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

#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "relations.hpp"

namespace speq {
namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double ParseDouble(const std::string& text) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError("bad numeric field '" + text + "'");
  }
  return value;
}

}  // namespace

int ReportPlayers(const Report& report) {
  if (report.scenario.contains("game") &&
      report.scenario["game"].contains("n")) {
    return report.scenario["game"]["n"].get<int>();
  }
  if (!report.rows.empty()) {
    return static_cast<int>(report.rows.front().profile.size());
  }
  throw InvalidArgument("report does not carry a player count");
}

void SortRows(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.profile != b.profile) return a.profile < b.profile;
              if (a.source != b.source) return a.source < b.source;
              return a.rank < b.rank;
            });
}

std::string FormatDouble(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string WriteCsv(const Report& report) {
  const int players = ReportPlayers(report);
  std::string out = "source,rank";
  for (int i = 1; i <= players; ++i) out += ",c_" + std::to_string(i);
  for (int i = 1; i <= players; ++i) out += ",u_" + std::to_string(i);
  out += '\n';
  for (const ReportRow& row : report.rows) {
    out += row.source;
    out += ',' + std::to_string(row.rank);
    for (double c : row.profile) out += ',' + FormatDouble(c);
    for (double u : row.payoffs) out += ',' + FormatDouble(u);
    out += '\n';
  }
  return out;
}

std::vector<ReportRow> ParseCsvRows(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty report CSV");
  }
  const std::vector<std::string> header = SplitCsvLine(line);
  if (header.size() < 4 || header[0] != "source" || header[1] != "rank" ||
      (header.size() - 2) % 2 != 0) {
    throw ParseError("unrecognized report CSV header '" + line + "'");
  }
  const size_t players = (header.size() - 2) / 2;

  std::vector<ReportRow> rows;
  size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != header.size()) {
      throw ParseError("line " + std::to_string(line_number) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    }
    ReportRow row;
    row.source = fields[0];
    row.rank = static_cast<int>(ParseDouble(fields[1]));
    for (size_t i = 0; i < players; ++i) {
      row.profile.push_back(ParseDouble(fields[2 + i]));
      row.payoffs.push_back(ParseDouble(fields[2 + players + i]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json ToJson(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back({{"source", row.source},
                    {"rank", row.rank},
                    {"profile", row.profile},
                    {"payoffs", row.payoffs}});
  }
  nlohmann::json history = nlohmann::json::array();
  for (const GenerationRecord& record : report.history) {
    history.push_back({{"generation", record.generation},
                       {"front_size", record.front_size},
                       {"centroid", record.centroid},
                       {"spread", record.spread}});
  }
  return {{"scenario", report.scenario},
          {"metadata",
           {{"seed", report.seed},
            {"generations", report.generations},
            {"wall_time_seconds", report.wall_seconds}}},
          {"history", history},
          {"rows", rows}};
}

Report ReportFromJson(const nlohmann::json& doc) {
  Report report;
  try {
    report.scenario = doc.at("scenario");
    for (const auto& row : doc.at("rows")) {
      ReportRow r;
      r.source = row.at("source").get<std::string>();
      r.rank = row.at("rank").get<int>();
      r.profile = row.at("profile").get<Profile>();
      r.payoffs = row.at("payoffs").get<PayoffVector>();
      report.rows.push_back(std::move(r));
    }
    const auto& meta = doc.at("metadata");
    report.seed = meta.at("seed").get<std::uint64_t>();
    report.generations = meta.at("generations").get<int>();
    report.wall_seconds = meta.at("wall_time_seconds").get<double>();
    if (doc.contains("history")) {
      for (const auto& entry : doc["history"]) {
        GenerationRecord record;
        record.generation = entry.at("generation").get<int>();
        record.front_size = entry.at("front_size").get<size_t>();
        record.centroid = entry.at("centroid").get<Profile>();
        record.spread = entry.at("spread").get<double>();
        report.history.push_back(std::move(record));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
  return report;
}

std::string WriteHistoryCsv(const Report& report) {
  const int players = ReportPlayers(report);
  std::string out = "generation,front_size";
  for (int i = 1; i <= players; ++i) out += ",centroid_c_" + std::to_string(i);
  out += ",spread\n";
  for (const GenerationRecord& record : report.history) {
    out += std::to_string(record.generation);
    out += ',' + std::to_string(record.front_size);
    for (double c : record.centroid) out += ',' + FormatDouble(c);
    out += ',' + FormatDouble(record.spread);
    out += '\n';
  }
  return out;
}

CompareSummary CompareReports(const Report& a, const Report& b,
                              double tolerance) {
  if (!a.scenario.contains("game") || !b.scenario.contains("game") ||
      a.scenario["game"] != b.scenario["game"]) {
    throw InvalidArgument("reports describe different games");
  }
  if (tolerance < 0.0) {
    const bool discrete =
        a.scenario["game"].value("kind", std::string()) == "discrete";
    tolerance = discrete ? 0.0 : 0.05;
  }

  CompareSummary summary;
  summary.tolerance = tolerance;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < b.rows.size(); ++j) {
      if (ProfileDistance(a.rows[i].profile, b.rows[j].profile) <= tolerance) {
        summary.matched.emplace_back(i, j);
        found = true;
        break;
      }
    }
    if (!found) summary.only_a.push_back(i);
  }
  for (size_t j = 0; j < b.rows.size(); ++j) {
    bool found = false;
    for (size_t i = 0; i < a.rows.size(); ++i) {
      if (ProfileDistance(a.rows[i].profile, b.rows[j].profile) <= tolerance) {
        found = true;
        break;
      }
    }
    if (!found) summary.only_b.push_back(j);
  }
  return summary;
}

nlohmann::json ToJson(const CompareSummary& summary) {
  nlohmann::json matched = nlohmann::json::array();
  for (const auto& [i, j] : summary.matched) {
    matched.push_back({{"a", i}, {"b", j}});
  }
  return {{"tolerance", summary.tolerance},
          {"matched", matched},
          {"only_a", summary.only_a},
          {"only_b", summary.only_b},
          {"matched_count", summary.matched.size()},
          {"only_a_count", summary.only_a.size()},
          {"only_b_count", summary.only_b.size()}};
}

}  // namespace speq
