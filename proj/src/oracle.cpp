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

#include "oracle.hpp"

#include <cmath>

namespace speq {
namespace {

struct GridSize {
  bool overflow;         // true when the count does not fit a uint64
  std::uint64_t count;   // valid when !overflow
  std::string readable;  // exact decimal rendering either way
};

GridSize CountProfiles(int players, int actions) {
  unsigned __int128 count = 1;
  bool overflow = false;
  for (int i = 0; i < players; ++i) {
    count *= static_cast<unsigned>(actions);
    if (count > static_cast<unsigned __int128>(UINT64_MAX)) {
      overflow = true;
      break;
    }
  }
  std::string readable;
  if (overflow) {
    readable = "more than " + std::to_string(UINT64_MAX);
  } else {
    readable = std::to_string(static_cast<std::uint64_t>(count));
  }
  return {overflow, overflow ? UINT64_MAX : static_cast<std::uint64_t>(count),
          readable};
}

}  // namespace

const char* ToString(EquilibriumSet::Kind kind) {
  switch (kind) {
    case EquilibriumSet::Kind::kNashBestResponse:
      return "nash-best-response";
    case EquilibriumSet::Kind::kFrontUnderRationality:
      return "front-under-rationality";
  }
  return "unknown";
}

ProfileEnumerator::ProfileEnumerator(const Game& game, std::uint64_t cap)
    : players_(game.players()) {
  if (!game.discrete()) {
    throw Unsupported("profile enumeration requires a discrete game");
  }
  actions_ = game.grid_actions();
  const GridSize size = CountProfiles(players_, actions_);
  if (size.overflow || size.count > cap) {
    throw ResourceLimit("grid of " + size.readable +
                        " profiles exceeds the enumeration cap of " +
                        std::to_string(cap));
  }
  count_ = size.count;
  cursor_.assign(static_cast<size_t>(players_), 0);
}

bool ProfileEnumerator::Next(Profile& out) {
  if (done_) return false;
  out.resize(static_cast<size_t>(players_));
  for (int i = 0; i < players_; ++i) {
    out[static_cast<size_t>(i)] = static_cast<double>(cursor_[i]);
  }
  // Lexicographic successor: bump the last coordinate, carrying left.
  int pos = players_ - 1;
  while (pos >= 0) {
    if (++cursor_[pos] < actions_) break;
    cursor_[pos] = 0;
    --pos;
  }
  if (pos < 0) done_ = true;
  return true;
}

EquilibriumSet ExactNash(const Game& game, std::uint64_t cap) {
  ProfileEnumerator enumerator(game, cap);
  const int actions = game.grid_actions();

  EquilibriumSet result{EquilibriumSet::Kind::kNashBestResponse, {}, {}};
  Profile profile;
  while (enumerator.Next(profile)) {
    const PayoffVector payoffs = game.Payoff(profile);
    bool equilibrium = true;
    for (int i = 0; i < game.players() && equilibrium; ++i) {
      const double current = payoffs[static_cast<size_t>(i)];
      for (int d = 0; d < actions; ++d) {
        if (game.DeviationPayoff(profile, i, d) > current) {
          equilibrium = false;
          break;
        }
      }
    }
    if (equilibrium) {
      result.profiles.push_back(profile);
      result.payoffs.push_back(payoffs);
    }
  }
  return result;
}

EquilibriumSet ExactFront(const Game& game, const Rationality& rationality,
                          std::uint64_t cap) {
  if (rationality.size() != game.players()) {
    throw InvalidArgument("rationality profile length does not match the "
                          "player count");
  }
  ProfileEnumerator enumerator(game, cap);
  std::vector<Profile> grid;
  std::vector<PayoffVector> payoffs;
  grid.reserve(enumerator.count());
  payoffs.reserve(enumerator.count());
  Profile profile;
  while (enumerator.Next(profile)) {
    grid.push_back(profile);
    payoffs.push_back(game.Payoff(profile));
  }

  EquilibriumSet result{EquilibriumSet::Kind::kFrontUnderRationality, {}, {}};
  for (size_t i = 0; i < grid.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < grid.size() && !dominated; ++j) {
      if (j == i) continue;
      dominated = NpDominates(game, rationality, grid[j], payoffs[j],
                              grid[i], payoffs[i]);
    }
    if (!dominated) {
      result.profiles.push_back(grid[i]);
      result.payoffs.push_back(payoffs[i]);
    }
  }
  return result;
}

}  // namespace speq
