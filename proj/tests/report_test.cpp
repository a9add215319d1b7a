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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "report.hpp"

using speq::CompareReports;
using speq::CompareSummary;
using speq::FormatDouble;
using speq::ParseCsvRows;
using speq::Report;
using speq::ReportRow;
using speq::SortRows;
using speq::WriteCsv;

namespace {

nlohmann::json GameEcho(int n, const std::string& kind) {
  return {{"game", {{"n", n}, {"w", 10.0}, {"k", 1.0}, {"kind", kind}}},
          {"rationality", std::string(n, 'N')}};
}

Report SampleReport() {
  Report report;
  report.scenario = GameEcho(2, "continuous");
  report.rows = {
      ReportRow{"evolved", 0, {2.9999999999999996, 3.0000000000000004},
                {8.9999999999999982, 9.0000000000000018}},
      ReportRow{"oracle", 0, {0.1, 1.0 / 3.0}, {0.7, -12345.678901234567}},
  };
  SortRows(report.rows);
  report.seed = 42;
  report.generations = 100;
  report.wall_seconds = 0.25;
  report.history.push_back({1, 7, {3.25, 2.75}, 0.5});
  return report;
}

}  // namespace

TEST_CASE("doubles survive the 17-digit round trip") {
  for (double v : {0.1, 1.0 / 3.0, 2.9999999999999996, -12345.678901234567,
                   1e-300, 0.0, 20.25, 5.0625}) {
    CHECK(std::strtod(FormatDouble(v).c_str(), nullptr) == v);
  }
  CHECK(FormatDouble(3.0) == "3");
}

TEST_CASE("CSV header and ordering") {
  const Report report = SampleReport();
  const std::string csv = WriteCsv(report);
  CHECK(csv.rfind("source,rank,c_1,c_2,u_1,u_2\n", 0) == 0);
  // Lexicographic by profile: the oracle row starts at 0.1.
  const size_t oracle_pos = csv.find("oracle");
  const size_t evolved_pos = csv.find("evolved");
  CHECK(oracle_pos < evolved_pos);
}

TEST_CASE("CSV round trip restores rows exactly") {
  const Report report = SampleReport();
  CHECK(ParseCsvRows(WriteCsv(report)) == report.rows);

  // Fuzzed payload.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> value(-100.0, 100.0);
  Report fuzz;
  fuzz.scenario = GameEcho(3, "continuous");
  for (int i = 0; i < 64; ++i) {
    fuzz.rows.push_back(ReportRow{i % 2 ? "oracle" : "evolved", 0,
                                  {value(rng), value(rng), value(rng)},
                                  {value(rng), value(rng), value(rng)}});
  }
  SortRows(fuzz.rows);
  CHECK(ParseCsvRows(WriteCsv(fuzz)) == fuzz.rows);
}

TEST_CASE("CSV parser rejects malformed input") {
  CHECK_THROWS_AS(ParseCsvRows(""), speq::ParseError);
  CHECK_THROWS_AS(ParseCsvRows("not,a,report\n"), speq::ParseError);
  CHECK_THROWS_AS(
      ParseCsvRows("source,rank,c_1,c_2,u_1,u_2\nevolved,0,1,2,3\n"),
      speq::ParseError);
  CHECK_THROWS_AS(
      ParseCsvRows("source,rank,c_1,c_2,u_1,u_2\nevolved,0,1,2,3,oops\n"),
      speq::ParseError);
}

TEST_CASE("JSON round trip") {
  const Report report = SampleReport();
  const Report back = speq::ReportFromJson(speq::ToJson(report));
  CHECK(back.rows == report.rows);
  CHECK(back.seed == report.seed);
  CHECK(back.generations == report.generations);
  CHECK(back.wall_seconds == report.wall_seconds);
  CHECK(back.scenario == report.scenario);
  REQUIRE(back.history.size() == 1);
  CHECK(back.history[0].generation == 1);
  CHECK(back.history[0].front_size == 7);
  CHECK(back.history[0].centroid == speq::Profile{3.25, 2.75});

  CHECK_THROWS_AS(speq::ReportFromJson(nlohmann::json::object()),
                  speq::ParseError);
}

TEST_CASE("history CSV lists one line per generation") {
  const Report report = SampleReport();
  const std::string csv = speq::WriteHistoryCsv(report);
  CHECK(csv.rfind("generation,front_size,centroid_c_1,centroid_c_2,spread\n",
                  0) == 0);
  CHECK(csv.find("\n1,7,3.25,2.75,0.5\n") != std::string::npos);
}

TEST_CASE("front comparison counts matches and leftovers") {
  Report seven;
  seven.scenario = GameEcho(3, "discrete");
  const std::vector<speq::Profile> nash = {{1, 3, 3}, {2, 2, 2}, {2, 2, 3},
                                           {2, 3, 2}, {3, 1, 3}, {3, 2, 2},
                                           {3, 3, 1}};
  for (const speq::Profile& p : nash) {
    seven.rows.push_back(ReportRow{"oracle", 0, p, {0, 0, 0}});
  }

  SUBCASE("identical reports match fully") {
    const CompareSummary same = CompareReports(seven, seven, -1.0);
    CHECK(same.tolerance == 0.0);  // discrete resolves to exact matching
    CHECK(same.matched.size() == 7);
    CHECK(same.only_a.empty());
    CHECK(same.only_b.empty());
  }

  SUBCASE("a missing point becomes a false positive on the other side") {
    Report six = seven;
    six.rows.erase(six.rows.begin() + 1);  // drop (2,2,2)
    const CompareSummary diff = CompareReports(seven, six, -1.0);
    CHECK(diff.matched.size() == 6);
    CHECK(diff.only_a.size() == 1);
    CHECK(diff.only_b.empty());
    CHECK(seven.rows[diff.only_a[0]].profile == speq::Profile{2, 2, 2});
  }

  SUBCASE("an empty front misses everything") {
    Report empty;
    empty.scenario = seven.scenario;
    const CompareSummary diff = CompareReports(empty, seven, -1.0);
    CHECK(diff.matched.empty());
    CHECK(diff.only_a.empty());
    CHECK(diff.only_b.size() == 7);
  }

  SUBCASE("mismatched games are refused") {
    Report other;
    other.scenario = GameEcho(2, "discrete");
    CHECK_THROWS_AS(CompareReports(seven, other, -1.0),
                    speq::InvalidArgument);
  }

  SUBCASE("continuous default tolerance is 0.05") {
    Report a;
    a.scenario = GameEcho(2, "continuous");
    a.rows.push_back(ReportRow{"evolved", 0, {3.01, 2.98}, {9, 9}});
    Report b;
    b.scenario = GameEcho(2, "continuous");
    b.rows.push_back(ReportRow{"oracle", 0, {3.0, 3.0}, {9, 9}});
    const CompareSummary diff = CompareReports(a, b, -1.0);
    CHECK(diff.tolerance == 0.05);
    CHECK(diff.matched.size() == 1);
    CHECK(diff.only_a.empty());
    CHECK(diff.only_b.empty());
  }
}
