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
#include <cmath>
#include <random>

#include "game.hpp"

using speq::ActionSpace;
using speq::Demand;
using speq::Game;
using speq::PayoffVector;
using speq::Profile;
using speq::ProfileViolation;

TEST_CASE("demand is the clamped linear curve") {
  CHECK(Demand(6, 10) == 4);
  CHECK(Demand(10, 10) == 0);
  CHECK(Demand(12, 10) == 0);
  CHECK(Demand(0, 10) == 10);
  CHECK_THROWS_AS(Demand(-1, 10), speq::InvalidArgument);
  CHECK_THROWS_AS(Demand(3, 0), speq::InvalidArgument);
}

TEST_CASE("construction rejects out-of-range parameters") {
  CHECK_THROWS_AS(Game(0, 10, 1, ActionSpace::kContinuous),
                  speq::InvalidArgument);
  CHECK_THROWS_AS(Game(2, 0, 1, ActionSpace::kContinuous),
                  speq::InvalidArgument);
  CHECK_THROWS_AS(Game(2, 10, -0.5, ActionSpace::kContinuous),
                  speq::InvalidArgument);
  // A cost above W makes every positive action a loss.
  CHECK_THROWS_AS(Game(2, 10, 10.5, ActionSpace::kContinuous),
                  speq::InvalidArgument);
  CHECK_NOTHROW(Game(2, 10, 0, ActionSpace::kContinuous));   // free access
  CHECK_NOTHROW(Game(2, 10, 10, ActionSpace::kContinuous));  // zero margin
  CHECK_NOTHROW(Game(1, 10, 1, ActionSpace::kDiscrete));
}

TEST_CASE("payoffs of the reference instances") {
  const Game two(2, 10, 1, ActionSpace::kContinuous);
  CHECK(two.Payoff({3, 3}) == PayoffVector{9, 9});

  const Game three(3, 10, 1, ActionSpace::kDiscrete);
  CHECK(three.Payoff({2, 2, 3}) == PayoffVector{4, 4, 6});

  // A player accessing nothing earns exactly nothing.
  const PayoffVector idle = two.Payoff({0, 4});
  CHECK(idle[0] == 0.0);
  CHECK(idle[1] == 20.0);

  // Saturated spectrum: demand clamps to zero, cost still applies.
  const PayoffVector jammed = two.Payoff({8, 7});
  CHECK(jammed == PayoffVector{-8, -7});

  CHECK_THROWS_AS(two.Payoff({3, 11}), speq::InvalidArgument);
}

TEST_CASE("closed-form Nash point") {
  CHECK(Game(2, 10, 1, ActionSpace::kContinuous).AnalyticNash() ==
        Profile{3, 3});
  CHECK(Game(3, 10, 1, ActionSpace::kContinuous).AnalyticNash() ==
        Profile{2.25, 2.25, 2.25});
  CHECK(Game(4, 10, 10, ActionSpace::kContinuous).AnalyticNash() ==
        Profile{0, 0, 0, 0});
  CHECK_THROWS_AS(Game(2, 10, 1, ActionSpace::kDiscrete).AnalyticNash(),
                  speq::Unsupported);
}

TEST_CASE("profile validation reports the broken constraint") {
  const Game cont(2, 10, 1, ActionSpace::kContinuous);
  const Game disc(2, 10, 1, ActionSpace::kDiscrete);

  CHECK(!cont.Validate({3, 3}).has_value());
  CHECK(!disc.Validate({0, 10}).has_value());

  auto below = cont.Validate({-1, 2});
  REQUIRE(below.has_value());
  CHECK(below->kind == ProfileViolation::Kind::kBelowLower);
  CHECK(below->index == 0);
  CHECK(below->value == -1);

  auto fractional = disc.Validate({2.5, 2});
  REQUIRE(fractional.has_value());
  CHECK(fractional->kind == ProfileViolation::Kind::kNotInteger);
  CHECK(fractional->index == 0);

  auto above = cont.Validate({3, 10.5});
  REQUIRE(above.has_value());
  CHECK(above->kind == ProfileViolation::Kind::kAboveUpper);
  CHECK(above->index == 1);

  auto length = cont.Validate({1, 2, 3});
  REQUIRE(length.has_value());
  CHECK(length->kind == ProfileViolation::Kind::kLength);

  auto nan = cont.Validate({std::nan(""), 1});
  REQUIRE(nan.has_value());
  CHECK(nan->kind == ProfileViolation::Kind::kNotFinite);

  CHECK(!below->Describe().empty());
}

TEST_CASE("discrete grid covers 0..floor(W)") {
  CHECK(Game(2, 10, 1, ActionSpace::kDiscrete).grid_actions() == 11);
  CHECK(Game(2, 10.7, 1, ActionSpace::kDiscrete).grid_actions() == 11);
  CHECK_THROWS_AS(Game(2, 10, 1, ActionSpace::kContinuous).grid_actions(),
                  speq::Unsupported);
}

TEST_CASE("payoffs are symmetric under player permutation") {
  // Exact on the integer grid; up to summation round-off in the reals
  // (the total is accumulated in a different order after the shuffle).
  const Game disc(3, 10, 1, ActionSpace::kDiscrete);
  const Game cont(3, 10, 1, ActionSpace::kContinuous);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> grid(0, 10);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    for (const Game* game : {&disc, &cont}) {
      Profile p(3);
      for (double& c : p) {
        c = game->discrete() ? double(grid(rng)) : coord(rng);
      }
      Profile q = p;
      std::shuffle(q.begin(), q.end(), rng);
      const PayoffVector up = game->Payoff(p);
      const PayoffVector uq = game->Payoff(q);
      for (size_t i = 0; i < q.size(); ++i) {
        // Find where q[i] sits in p; symmetric games pay by action only.
        for (size_t j = 0; j < p.size(); ++j) {
          if (q[i] == p[j]) {
            if (game->discrete()) {
              CHECK(uq[i] == up[j]);
            } else {
              CHECK(uq[i] == doctest::Approx(up[j]).epsilon(1e-12));
            }
            break;
          }
        }
      }
    }
  }
}

TEST_CASE("no unilateral deviation beats the analytic Nash point") {
  for (int players : {2, 3}) {
    const Game game(players, 10, 1, ActionSpace::kContinuous);
    const Profile nash = game.AnalyticNash();
    const PayoffVector at_nash = game.Payoff(nash);
    for (int i = 0; i < players; ++i) {
      for (int step = 0; step < 1000; ++step) {
        const double d = 10.0 * step / 999.0;
        CHECK(game.DeviationPayoff(nash, i, d) <= at_nash[i] + 1e-9);
      }
    }
  }
}

TEST_CASE("clamped payoff equals the linear rewrite while demand is positive") {
  const Game game(3, 10, 1, ActionSpace::kContinuous);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(0.0, 10.0 / 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Profile p = {coord(rng), coord(rng), coord(rng)};
    const double total = p[0] + p[1] + p[2];
    REQUIRE(total <= 10.0);
    const PayoffVector u = game.Payoff(p);
    for (size_t i = 0; i < p.size(); ++i) {
      CHECK(u[i] == (10.0 - total) * p[i] - 1.0 * p[i]);
    }
  }
}

TEST_CASE("deviation payoff agrees with a full payoff evaluation") {
  const Game game(3, 10, 1, ActionSpace::kDiscrete);
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coord(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    Profile p = {double(coord(rng)), double(coord(rng)), double(coord(rng))};
    const PayoffVector u = game.Payoff(p);
    for (int i = 0; i < 3; ++i) {
      CHECK(game.DeviationPayoff(p, i, p[size_t(i)]) == u[size_t(i)]);
      const double d = coord(rng);
      Profile swapped = p;
      swapped[size_t(i)] = d;
      CHECK(game.DeviationPayoff(p, i, d) == game.Payoff(swapped)[size_t(i)]);
    }
  }
}
