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

#ifndef SPEQ_GAME_HPP
#define SPEQ_GAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace speq {

// A strategy profile: one action per player, c = (c_1, ..., c_n).
using Profile = std::vector<double>;

// One payoff per player for a given profile.
using PayoffVector = std::vector<double>;

enum class ActionSpace {
  kContinuous,  // c_i in [0, W]
  kDiscrete,    // c_i in {0, 1, ..., floor(W)}
};

// Structured result of profile validation: which coordinate broke which
// constraint.
struct ProfileViolation {
  enum class Kind {
    kLength,      // wrong number of coordinates
    kNotFinite,   // NaN or infinity
    kBelowLower,  // c_i < 0
    kAboveUpper,  // c_i > W
    kNotInteger,  // discrete game, non-integer coordinate
  };

  Kind kind;
  int index;     // offending coordinate, or -1 for length violations
  double value;  // offending value (the actual length for kLength)

  std::string Describe() const;
};

// Channel demand: non-interfered symbols per channel given the total number
// of accessed channels. W - total when total <= W, zero beyond that.
// Throws InvalidArgument for a negative total.
double Demand(double total_accessed, double channels);

// A symmetric channel-access game. Each of n players picks how many of the
// W available channels to occupy; player i earns Demand(C) * c_i - K * c_i
// where C is the total occupancy. Immutable after construction; all member
// functions are const and safe to call concurrently.
class Game {
 public:
  // Requires n >= 1, W > 0 and 0 <= K <= W. A per-channel cost above W
  // would make every positive action a strict loss, so it is rejected.
  Game(int players, double channels, double access_cost, ActionSpace space);

  int players() const { return players_; }
  double channels() const { return channels_; }
  double access_cost() const { return access_cost_; }
  ActionSpace action_space() const { return space_; }
  bool discrete() const { return space_ == ActionSpace::kDiscrete; }

  // Number of grid actions per player of a discrete game: floor(W) + 1.
  int grid_actions() const;

  // Payoff of every player. Throws InvalidArgument if the profile is not
  // valid for this game.
  PayoffVector Payoff(const Profile& profile) const;

  // Payoff of `player` when it unilaterally switches to `action` while the
  // remaining players keep their `base` actions. Used heavily by the
  // best-response and dominance machinery; `base` is assumed valid.
  double DeviationPayoff(const Profile& base, int player, double action) const;

  // The analytic Nash point of the continuous game: every component equals
  // (W - K) / (n + 1). Throws Unsupported for discrete games, whose
  // equilibria come from exhaustive search instead.
  Profile AnalyticNash() const;

  // Checks length, bounds and (for discrete games) integrality. Returns
  // nullopt when the profile is acceptable.
  std::optional<ProfileViolation> Validate(const Profile& profile) const;

  // Throws InvalidArgument carrying the violation description.
  void RequireValid(const Profile& profile) const;

  bool operator==(const Game& other) const = default;

 private:
  int players_;
  double channels_;
  double access_cost_;
  ActionSpace space_;
};

}  // namespace speq

#endif  // SPEQ_GAME_HPP
