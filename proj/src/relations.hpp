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

#ifndef SPEQ_RELATIONS_HPP
#define SPEQ_RELATIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "game.hpp"

namespace speq {

// Two profiles count as the same strategy when no coordinate differs by
// more than this. Also used for the per-component comparison inside the
// relative-efficiency score, so that floating-point populations can
// actually tie.
inline constexpr double kProfileEpsilon = 1e-6;

enum class Bias : std::uint8_t {
  kNash,    // the player defends its own payoff against unilateral deviation
  kPareto,  // the player pushes toward collectively unimprovable outcomes
};

// Per-player equilibrium bias r_i. Splits the players into the Nash-biased
// index set and the Pareto-biased one; the two sets partition {0..n-1}.
class Rationality {
 public:
  explicit Rationality(std::vector<Bias> biases);

  static Rationality AllNash(int players);
  static Rationality AllPareto(int players);

  // Parses player-ordered comma-separated tokens, e.g. "N,N,P".
  // Case-insensitive; accepts N|P (also the spelled-out nash|pareto).
  static Rationality Parse(std::string_view text);

  std::string ToString() const;  // "N,N,P"

  int size() const { return static_cast<int>(biases_.size()); }
  Bias bias(int player) const { return biases_[static_cast<size_t>(player)]; }
  int nash_count() const { return nash_count_; }
  int pareto_count() const { return size() - nash_count_; }
  bool all_nash() const { return nash_count_ == size(); }
  bool all_pareto() const { return nash_count_ == 0; }

  bool operator==(const Rationality& other) const = default;

 private:
  std::vector<Bias> biases_;
  int nash_count_;
};

// Max-coordinate distance between two equal-length profiles.
double ProfileDistance(const Profile& x, const Profile& y);

// True when the two profiles are the same strategy up to kProfileEpsilon.
bool SameProfile(const Profile& x, const Profile& y);

// x Pareto-dominates y: at least as good for every player, strictly better
// for at least one.
bool ParetoDominates(const Game& game, const Profile& x, const Profile& y);
bool ParetoDominates(std::span<const double> payoffs_x,
                     std::span<const double> payoffs_y);

// Relative efficiency of x against y: the number of Nash-biased players
// that strictly gain by unilaterally switching from y to their x
// component, plus the Pareto-biased player count when x Pareto-dominates y.
// Always in [0, n]; zero when x == y.
int RelativeEfficiency(const Game& game, const Rationality& rationality,
                       const Profile& x, const Profile& y);
int RelativeEfficiency(const Game& game, const Rationality& rationality,
                       const Profile& x, std::span<const double> payoffs_x,
                       const Profile& y, std::span<const double> payoffs_y);

// The dominance test driving equilibrium detection: x dominates y when y's
// efficiency against x is strictly below x's efficiency against y. With
// every player Pareto-biased this is exactly Pareto dominance; with every
// player Nash-biased it is the unilateral-improvement ascendancy relation.
bool NpDominates(const Game& game, const Rationality& rationality,
                 const Profile& x, const Profile& y);
bool NpDominates(const Game& game, const Rationality& rationality,
                 const Profile& x, std::span<const double> payoffs_x,
                 const Profile& y, std::span<const double> payoffs_y);

// Members of `profiles` that no other member dominates, in input order,
// with duplicate strategies (up to kProfileEpsilon) collapsed onto their
// first occurrence. Throws InvalidArgument on empty input.
std::vector<Profile> NondominatedSet(const Game& game,
                                     const Rationality& rationality,
                                     const std::vector<Profile>& profiles);

}  // namespace speq

#endif  // SPEQ_RELATIONS_HPP
