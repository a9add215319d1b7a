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

#ifndef SPEQ_SOLVER_HPP
#define SPEQ_SOLVER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "game.hpp"
#include "oracle.hpp"
#include "relations.hpp"
#include "rng.hpp"

namespace speq {

// Parameters of the evolutionary front detector. The defaults are the
// canonical elitist-GA settings; a negative mutation_rate resolves to
// one over the player count at run time.
struct SolverParams {
  int population_size = 100;   // >= 4 and even
  int max_generations = 100;   // >= 1
  double crossover_rate = 0.9;
  double mutation_rate = -1.0;  // per coordinate; negative = 1/n
  double crossover_index = 15.0;
  double mutation_index = 20.0;
  std::uint64_t seed = 1;

  void Validate() const;
  double ResolveMutationRate(const Game& game) const;
};

// A candidate profile with its cached payoffs and the fitness bookkeeping
// of the elitist sort.
struct Individual {
  Profile profile;
  PayoffVector payoffs;
  int rank = 0;
  double crowding = 0.0;
};

// One line of the per-generation trace: how the rank-0 front looked after
// survivor selection. Spread is the largest max-coordinate distance of a
// front member from the centroid.
struct GenerationRecord {
  int generation;  // 1-based
  size_t front_size;
  Profile centroid;
  double spread;
};

using RunHistory = std::vector<GenerationRecord>;

struct EvolveResult {
  EquilibriumSet front;  // rank-0 front of the final population, deduplicated
  RunHistory history;    // one record per completed generation
};

// Partitions the population into fronts under the generative dominance
// relation and writes each individual's rank. Front 0 is the non-dominated
// set; front k is non-dominated once fronts 0..k-1 are removed. The
// relation is not transitive, so members caught in domination cycles
// (which no peeling order can rank) share one trailing front. Returns the
// member indices of each front.
std::vector<std::vector<size_t>> NondominatedSort(
    const Game& game, const Rationality& rationality,
    std::vector<Individual>& population);

// NSGA-II crowding distance over payoff space, written into the members of
// one front. Boundary members per objective get +infinity; an objective
// with zero range contributes nothing.
void AssignCrowding(std::vector<Individual>& population,
                    const std::vector<size_t>& front);

// One crossover + mutation step. Continuous games use simulated binary
// crossover followed by polynomial mutation; discrete games use uniform
// coordinate crossover followed by random-reset mutation. Children are
// always valid profiles.
std::pair<Profile, Profile> MakeOffspring(const Game& game,
                                          const SolverParams& params,
                                          const Profile& parent_a,
                                          const Profile& parent_b, Rng& rng);

// Runs the full generational loop: uniform random initialization, binary
// tournaments on (rank, crowding), variation, merge of parents and
// offspring, and truncation back to the population size. Deterministic for
// a fixed seed. Non-convergence is not an error; the history shows it.
EvolveResult Evolve(const Game& game, const Rationality& rationality,
                    const SolverParams& params);

}  // namespace speq

#endif  // SPEQ_SOLVER_HPP
