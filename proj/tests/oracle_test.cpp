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

#include <algorithm>
#include <set>
#include <vector>

#include "oracle.hpp"

using speq::ActionSpace;
using speq::EquilibriumSet;
using speq::ExactFront;
using speq::ExactNash;
using speq::Game;
using speq::Profile;
using speq::ProfileEnumerator;
using speq::Rationality;

namespace {

std::set<Profile> AsSet(const EquilibriumSet& set) {
  return {set.profiles.begin(), set.profiles.end()};
}

// Best-response check written from scratch for two players, as a cross
// check on the streaming implementation.
std::set<Profile> TwoPlayerNashByHand(const Game& game) {
  std::set<Profile> equilibria;
  const int actions = game.grid_actions();
  for (int a = 0; a < actions; ++a) {
    for (int b = 0; b < actions; ++b) {
      const Profile p = {double(a), double(b)};
      const auto u = game.Payoff(p);
      bool nash = true;
      for (int d = 0; d < actions && nash; ++d) {
        if (game.Payoff({double(d), double(b)})[0] > u[0]) nash = false;
        if (game.Payoff({double(a), double(d)})[1] > u[1]) nash = false;
      }
      if (nash) equilibria.insert(p);
    }
  }
  return equilibria;
}

}  // namespace

TEST_CASE("enumeration is lexicographic and complete") {
  const Game game(2, 10, 1, ActionSpace::kDiscrete);
  ProfileEnumerator enumerator(game);
  CHECK(enumerator.count() == 121);

  std::vector<Profile> all;
  Profile p;
  while (enumerator.Next(p)) all.push_back(p);
  REQUIRE(all.size() == 121);
  CHECK(all.front() == Profile{0, 0});
  CHECK(all[1] == Profile{0, 1});
  CHECK(all[11] == Profile{1, 0});
  CHECK(all.back() == Profile{10, 10});
  CHECK(std::is_sorted(all.begin(), all.end()));

  CHECK(ProfileEnumerator(Game(3, 10, 1, ActionSpace::kDiscrete)).count() ==
        1331);

  ProfileEnumerator tiny(Game(1, 2, 1, ActionSpace::kDiscrete));
  std::vector<Profile> singles;
  while (tiny.Next(p)) singles.push_back(p);
  CHECK(singles == std::vector<Profile>{{0}, {1}, {2}});
}

TEST_CASE("enumeration guards its inputs") {
  CHECK_THROWS_AS(
      ProfileEnumerator(Game(2, 10, 1, ActionSpace::kContinuous)),
      speq::Unsupported);
  try {
    ProfileEnumerator(Game(3, 10, 1, ActionSpace::kDiscrete), 100);
    FAIL("cap should have tripped");
  } catch (const speq::ResourceLimit& e) {
    CHECK(std::string(e.what()).find("1331") != std::string::npos);
  }
}

TEST_CASE("three-player grid has exactly seven equilibria") {
  const Game game(3, 10, 1, ActionSpace::kDiscrete);
  const EquilibriumSet nash = ExactNash(game);
  CHECK(nash.kind == EquilibriumSet::Kind::kNashBestResponse);

  const std::set<Profile> expected = {{2, 2, 2}, {2, 2, 3}, {2, 3, 2},
                                      {3, 2, 2}, {1, 3, 3}, {3, 1, 3},
                                      {3, 3, 1}};
  CHECK(AsSet(nash) == expected);

  // Payoffs, exactly.
  for (size_t i = 0; i < nash.size(); ++i) {
    CHECK(nash.payoffs[i] == game.Payoff(nash.profiles[i]));
  }
  std::set<std::vector<double>> payoffs(nash.payoffs.begin(),
                                        nash.payoffs.end());
  const std::set<std::vector<double>> expected_payoffs = {
      {6, 6, 6}, {4, 4, 6}, {4, 6, 4}, {6, 4, 4},
      {2, 6, 6}, {6, 2, 6}, {6, 6, 2}};
  CHECK(payoffs == expected_payoffs);
}

TEST_CASE("the equilibrium set is closed under player permutation") {
  const Game game(3, 10, 1, ActionSpace::kDiscrete);
  const std::set<Profile> nash = AsSet(ExactNash(game));
  for (Profile p : nash) {
    std::sort(p.begin(), p.end());
    do {
      CHECK(nash.count(p) == 1);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("two-player grid equilibria match a from-scratch check") {
  const Game game(2, 10, 1, ActionSpace::kDiscrete);
  const EquilibriumSet nash = ExactNash(game);
  CHECK(AsSet(nash) == TwoPlayerNashByHand(game));
  CHECK(AsSet(nash) ==
        std::set<Profile>{{2, 4}, {3, 3}, {4, 2}});
  // Lexicographic output order.
  CHECK(nash.profiles ==
        std::vector<Profile>{{2, 4}, {3, 3}, {4, 2}});
}

TEST_CASE("one-player game: the monopoly ties") {
  const Game game(1, 10, 1, ActionSpace::kDiscrete);
  // 9c - c^2 over integers peaks at both 4 and 5 (payoff 20).
  CHECK(AsSet(ExactNash(game)) == std::set<Profile>{{4}, {5}});
  CHECK(AsSet(ExactFront(game, Rationality::AllPareto(1))) ==
        std::set<Profile>{{4}, {5}});
}

TEST_CASE("all-Pareto front of the two-player grid") {
  const Game game(2, 10, 1, ActionSpace::kDiscrete);
  const EquilibriumSet front = ExactFront(game, Rationality::AllPareto(2));
  CHECK(front.kind == EquilibriumSet::Kind::kFrontUnderRationality);
  const std::set<Profile> profiles = AsSet(front);
  // The equal split of the aggregate optimum survives: nothing weakly
  // improves on payoffs (10, 10).
  CHECK(profiles.count({2, 2}) == 1);
  for (const Profile& p : front.profiles) {
    CHECK(!speq::ParetoDominates(game, {2, 2}, p));
  }
}

TEST_CASE("all-Nash front contains every best-response equilibrium") {
  for (int players : {2, 3}) {
    const Game game(players, 10, 1, ActionSpace::kDiscrete);
    const std::set<Profile> nash = AsSet(ExactNash(game));
    const std::set<Profile> front =
        AsSet(ExactFront(game, Rationality::AllNash(players)));
    for (const Profile& p : nash) {
      CHECK(front.count(p) == 1);
    }
  }
}

TEST_CASE("a front is a fixed point of nondominated filtering") {
  const Game game(3, 10, 1, ActionSpace::kDiscrete);
  for (const Rationality& r :
       {Rationality::AllNash(3), Rationality::Parse("N,N,P"),
        Rationality::AllPareto(3)}) {
    const EquilibriumSet front = ExactFront(game, r);
    CHECK(speq::NondominatedSet(game, r, front.profiles) == front.profiles);
  }
}

TEST_CASE("front computations reject continuous games") {
  const Game game(2, 10, 1, ActionSpace::kContinuous);
  CHECK_THROWS_AS(ExactNash(game), speq::Unsupported);
  CHECK_THROWS_AS(ExactFront(game, Rationality::AllNash(2)),
                  speq::Unsupported);
}
