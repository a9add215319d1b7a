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

#ifndef SPEQ_ORACLE_HPP
#define SPEQ_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "game.hpp"
#include "relations.hpp"

namespace speq {

// Refuse to enumerate discrete games with more profiles than this unless
// the caller raises the cap. Three players over eleven actions is nothing;
// the cap is there to fail loudly on inputs that would not be.
inline constexpr std::uint64_t kDefaultProfileCap = 100'000'000;

// An exact result set: profiles with their payoffs and the check that
// produced them.
struct EquilibriumSet {
  enum class Kind {
    kNashBestResponse,       // exhaustive best-response check
    kFrontUnderRationality,  // non-dominated set under a generative relation
  };

  Kind kind;
  std::vector<Profile> profiles;
  std::vector<PayoffVector> payoffs;  // payoffs[i] belongs to profiles[i]

  size_t size() const { return profiles.size(); }
};

const char* ToString(EquilibriumSet::Kind kind);

// Streams every profile of a discrete game exactly once, in lexicographic
// order. Throws Unsupported for continuous games and ResourceLimit (naming
// the full count) when (floor(W)+1)^n exceeds the cap.
class ProfileEnumerator {
 public:
  explicit ProfileEnumerator(const Game& game,
                             std::uint64_t cap = kDefaultProfileCap);

  std::uint64_t count() const { return count_; }

  // Fills `out` with the next profile; returns false once exhausted.
  bool Next(Profile& out);

 private:
  int players_;
  int actions_;
  std::uint64_t count_;
  std::vector<int> cursor_;
  bool done_ = false;
};

// All pure Nash equilibria of a discrete game by exhaustive best-response
// check; ties are allowed, so weak equilibria are included.
EquilibriumSet ExactNash(const Game& game,
                         std::uint64_t cap = kDefaultProfileCap);

// The full-grid non-dominated set under the generative relation for the
// given rationality. All-Pareto input yields the exact Pareto equilibria,
// all-Nash the unilateral-improvement front.
EquilibriumSet ExactFront(const Game& game, const Rationality& rationality,
                          std::uint64_t cap = kDefaultProfileCap);

}  // namespace speq

#endif  // SPEQ_ORACLE_HPP
