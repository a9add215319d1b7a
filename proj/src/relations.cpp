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

#include "relations.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace speq {
namespace {

std::string LowerTrim(std::string_view token) {
  size_t begin = token.find_first_not_of(" \t");
  size_t end = token.find_last_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  std::string out(token.substr(begin, end - begin + 1));
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

void CheckProfilePair(const Game& game, const Profile& x, const Profile& y) {
  game.RequireValid(x);
  game.RequireValid(y);
  if (x.size() != y.size()) {
    throw InvalidArgument("profiles have mismatched lengths");
  }
}

void CheckRationality(const Game& game, const Rationality& rationality) {
  if (rationality.size() != game.players()) {
    throw InvalidArgument("rationality profile has " +
                          std::to_string(rationality.size()) +
                          " entries for a game of " +
                          std::to_string(game.players()) + " players");
  }
}

}  // namespace

Rationality::Rationality(std::vector<Bias> biases)
    : biases_(std::move(biases)), nash_count_(0) {
  if (biases_.empty()) {
    throw InvalidArgument("rationality profile must not be empty");
  }
  for (Bias b : biases_) {
    if (b == Bias::kNash) ++nash_count_;
  }
}

Rationality Rationality::AllNash(int players) {
  return Rationality(std::vector<Bias>(static_cast<size_t>(players),
                                       Bias::kNash));
}

Rationality Rationality::AllPareto(int players) {
  return Rationality(std::vector<Bias>(static_cast<size_t>(players),
                                       Bias::kPareto));
}

Rationality Rationality::Parse(std::string_view text) {
  std::vector<Bias> biases;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string token = LowerTrim(text.substr(
        start, comma == std::string_view::npos ? comma : comma - start));
    if (token == "n" || token == "nash") {
      biases.push_back(Bias::kNash);
    } else if (token == "p" || token == "pareto") {
      biases.push_back(Bias::kPareto);
    } else {
      throw ParseError("bad rationality token '" + token +
                       "' (expected N or P), in \"" + std::string(text) +
                       "\"");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Rationality(std::move(biases));
}

std::string Rationality::ToString() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ',';
    out += bias(i) == Bias::kNash ? 'N' : 'P';
  }
  return out;
}

double ProfileDistance(const Profile& x, const Profile& y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("profiles have mismatched lengths");
  }
  double dist = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    dist = std::max(dist, std::abs(x[i] - y[i]));
  }
  return dist;
}

bool SameProfile(const Profile& x, const Profile& y) {
  return ProfileDistance(x, y) <= kProfileEpsilon;
}

bool ParetoDominates(std::span<const double> payoffs_x,
                     std::span<const double> payoffs_y) {
  if (payoffs_x.size() != payoffs_y.size()) {
    throw InvalidArgument("payoff vectors have mismatched lengths");
  }
  bool strict = false;
  for (size_t i = 0; i < payoffs_x.size(); ++i) {
    if (payoffs_x[i] < payoffs_y[i]) return false;
    if (payoffs_x[i] > payoffs_y[i]) strict = true;
  }
  return strict;
}

bool ParetoDominates(const Game& game, const Profile& x, const Profile& y) {
  CheckProfilePair(game, x, y);
  const PayoffVector ux = game.Payoff(x);
  const PayoffVector uy = game.Payoff(y);
  return ParetoDominates(std::span<const double>(ux),
                         std::span<const double>(uy));
}

int RelativeEfficiency(const Game& game, const Rationality& rationality,
                       const Profile& x, std::span<const double> payoffs_x,
                       const Profile& y, std::span<const double> payoffs_y) {
  CheckRationality(game, rationality);
  int score = 0;
  for (int i = 0; i < game.players(); ++i) {
    if (rationality.bias(i) != Bias::kNash) continue;
    const size_t idx = static_cast<size_t>(i);
    if (std::abs(x[idx] - y[idx]) <= kProfileEpsilon) continue;
    // Strict improvement. Counting payoff ties as improvements would let
    // tie-rich profiles dominate weak equilibria on discrete grids (e.g.
    // a symmetric profile outscoring a weak Nash point three ties to two),
    // so a weak equilibrium could be expelled from its own front.
    if (game.DeviationPayoff(y, i, x[idx]) > payoffs_y[idx]) ++score;
  }
  if (rationality.pareto_count() > 0 &&
      ParetoDominates(payoffs_x, payoffs_y)) {
    score += rationality.pareto_count();
  }
  return score;
}

int RelativeEfficiency(const Game& game, const Rationality& rationality,
                       const Profile& x, const Profile& y) {
  CheckProfilePair(game, x, y);
  const PayoffVector ux = game.Payoff(x);
  const PayoffVector uy = game.Payoff(y);
  return RelativeEfficiency(game, rationality, x,
                            std::span<const double>(ux), y,
                            std::span<const double>(uy));
}

bool NpDominates(const Game& game, const Rationality& rationality,
                 const Profile& x, std::span<const double> payoffs_x,
                 const Profile& y, std::span<const double> payoffs_y) {
  return RelativeEfficiency(game, rationality, y, payoffs_y, x, payoffs_x) <
         RelativeEfficiency(game, rationality, x, payoffs_x, y, payoffs_y);
}

bool NpDominates(const Game& game, const Rationality& rationality,
                 const Profile& x, const Profile& y) {
  CheckProfilePair(game, x, y);
  const PayoffVector ux = game.Payoff(x);
  const PayoffVector uy = game.Payoff(y);
  return NpDominates(game, rationality, x, std::span<const double>(ux), y,
                     std::span<const double>(uy));
}

std::vector<Profile> NondominatedSet(const Game& game,
                                     const Rationality& rationality,
                                     const std::vector<Profile>& profiles) {
  if (profiles.empty()) {
    throw InvalidArgument("nondominated set of an empty collection");
  }
  CheckRationality(game, rationality);

  std::vector<PayoffVector> payoffs;
  payoffs.reserve(profiles.size());
  for (const Profile& p : profiles) payoffs.push_back(game.Payoff(p));

  std::vector<Profile> survivors;
  for (size_t i = 0; i < profiles.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < profiles.size() && !dominated; ++j) {
      if (j == i) continue;
      dominated = NpDominates(game, rationality, profiles[j], payoffs[j],
                              profiles[i], payoffs[i]);
    }
    if (dominated) continue;
    bool duplicate = false;
    for (const Profile& kept : survivors) {
      if (SameProfile(kept, profiles[i])) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) survivors.push_back(profiles[i]);
  }
  return survivors;
}

}  // namespace speq
