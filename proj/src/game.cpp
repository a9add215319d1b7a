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

#include "game.hpp"

#include <cmath>
#include <sstream>

namespace speq {

std::string ProfileViolation::Describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kLength:
      out << "profile has " << static_cast<long long>(value)
          << " coordinates, expected the player count";
      break;
    case Kind::kNotFinite:
      out << "coordinate " << index << " is not finite";
      break;
    case Kind::kBelowLower:
      out << "coordinate " << index << " = " << value
          << " is below the lower bound 0";
      break;
    case Kind::kAboveUpper:
      out << "coordinate " << index << " = " << value
          << " is above the upper bound (channel count)";
      break;
    case Kind::kNotInteger:
      out << "coordinate " << index << " = " << value
          << " is not an integer in a discrete game";
      break;
  }
  return out.str();
}

double Demand(double total_accessed, double channels) {
  if (!(channels > 0)) {
    throw InvalidArgument("channel count must be positive");
  }
  if (!(total_accessed >= 0)) {
    throw InvalidArgument("total accessed channels must be non-negative");
  }
  return total_accessed <= channels ? channels - total_accessed : 0.0;
}

Game::Game(int players, double channels, double access_cost, ActionSpace space)
    : players_(players),
      channels_(channels),
      access_cost_(access_cost),
      space_(space) {
  if (players < 1) {
    throw InvalidArgument("player count must be at least 1");
  }
  if (!(channels > 0) || !std::isfinite(channels)) {
    throw InvalidArgument("channel count W must be positive and finite");
  }
  if (!(access_cost >= 0) || !std::isfinite(access_cost)) {
    throw InvalidArgument("access cost K must be non-negative and finite");
  }
  if (access_cost > channels) {
    throw InvalidArgument(
        "access cost K above the channel count W makes every positive "
        "action strictly loss-making");
  }
}

int Game::grid_actions() const {
  if (!discrete()) {
    throw Unsupported("grid actions are only defined for discrete games");
  }
  return static_cast<int>(std::floor(channels_)) + 1;
}

PayoffVector Game::Payoff(const Profile& profile) const {
  RequireValid(profile);
  double total = 0.0;
  for (double c : profile) total += c;
  const double price = Demand(total, channels_);
  PayoffVector payoffs(profile.size());
  for (size_t i = 0; i < profile.size(); ++i) {
    payoffs[i] = price * profile[i] - access_cost_ * profile[i];
  }
  return payoffs;
}

double Game::DeviationPayoff(const Profile& base, int player,
                             double action) const {
  double total = action;
  for (size_t k = 0; k < base.size(); ++k) {
    if (static_cast<int>(k) != player) total += base[k];
  }
  const double price = total <= channels_ ? channels_ - total : 0.0;
  return price * action - access_cost_ * action;
}

Profile Game::AnalyticNash() const {
  if (discrete()) {
    throw Unsupported(
        "the closed-form Nash point only exists for continuous games; use "
        "the exhaustive solver for discrete ones");
  }
  const double component = (channels_ - access_cost_) / (players_ + 1);
  return Profile(static_cast<size_t>(players_), component);
}

std::optional<ProfileViolation> Game::Validate(const Profile& profile) const {
  if (profile.size() != static_cast<size_t>(players_)) {
    return ProfileViolation{ProfileViolation::Kind::kLength, -1,
                            static_cast<double>(profile.size())};
  }
  for (size_t i = 0; i < profile.size(); ++i) {
    const double c = profile[i];
    const int index = static_cast<int>(i);
    if (!std::isfinite(c)) {
      return ProfileViolation{ProfileViolation::Kind::kNotFinite, index, c};
    }
    if (c < 0.0) {
      return ProfileViolation{ProfileViolation::Kind::kBelowLower, index, c};
    }
    if (c > channels_) {
      return ProfileViolation{ProfileViolation::Kind::kAboveUpper, index, c};
    }
    if (discrete() && c != std::floor(c)) {
      return ProfileViolation{ProfileViolation::Kind::kNotInteger, index, c};
    }
  }
  return std::nullopt;
}

void Game::RequireValid(const Profile& profile) const {
  if (auto violation = Validate(profile)) {
    throw InvalidArgument("invalid profile: " + violation->Describe());
  }
}

}  // namespace speq
