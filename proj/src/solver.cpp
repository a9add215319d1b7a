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

#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace speq {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double Clip(double value, double lo, double hi) {
  return std::min(std::max(value, lo), hi);
}

// Simulated binary crossover on one coordinate pair (unbounded form, then
// clipped to the action interval).
std::pair<double, double> SbxPair(double a, double b, double eta, double lo,
                                  double hi, Rng& rng) {
  if (std::abs(a - b) < 1e-14) return {a, b};
  const double u = rng.Uniform();
  double beta;
  if (u <= 0.5) {
    beta = std::pow(2.0 * u, 1.0 / (eta + 1.0));
  } else {
    beta = std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
  }
  double child_a = 0.5 * ((1.0 + beta) * a + (1.0 - beta) * b);
  double child_b = 0.5 * ((1.0 - beta) * a + (1.0 + beta) * b);
  return {Clip(child_a, lo, hi), Clip(child_b, lo, hi)};
}

// Polynomial mutation of one coordinate (bounded form).
double PolynomialMutate(double y, double eta, double lo, double hi, Rng& rng) {
  const double range = hi - lo;
  const double delta1 = (y - lo) / range;
  const double delta2 = (hi - y) / range;
  const double rnd = rng.Uniform();
  const double mut_pow = 1.0 / (eta + 1.0);
  double deltaq;
  if (rnd <= 0.5) {
    const double xy = 1.0 - delta1;
    const double val = 2.0 * rnd + (1.0 - 2.0 * rnd) * std::pow(xy, eta + 1.0);
    deltaq = std::pow(val, mut_pow) - 1.0;
  } else {
    const double xy = 1.0 - delta2;
    const double val =
        2.0 * (1.0 - rnd) + 2.0 * (rnd - 0.5) * std::pow(xy, eta + 1.0);
    deltaq = 1.0 - std::pow(val, mut_pow);
  }
  return Clip(y + deltaq * range, lo, hi);
}

// Lower rank wins; equal ranks prefer the less crowded region; remaining
// ties break on the lower index so runs are reproducible.
size_t TournamentWinner(const std::vector<Individual>& population, size_t a,
                        size_t b) {
  if (population[a].rank != population[b].rank) {
    return population[a].rank < population[b].rank ? a : b;
  }
  if (population[a].crowding != population[b].crowding) {
    return population[a].crowding > population[b].crowding ? a : b;
  }
  return std::min(a, b);
}

Profile RandomProfile(const Game& game, Rng& rng) {
  Profile profile(static_cast<size_t>(game.players()));
  if (game.discrete()) {
    const int top = game.grid_actions() - 1;
    for (double& c : profile) c = rng.UniformInt(0, top);
  } else {
    for (double& c : profile) c = rng.Uniform(0.0, game.channels());
  }
  return profile;
}

Individual MakeIndividual(const Game& game, Profile profile) {
  Individual ind;
  ind.payoffs = game.Payoff(profile);  // also validates the profile
  ind.profile = std::move(profile);
  return ind;
}

GenerationRecord SummarizeFront(int generation,
                                const std::vector<Individual>& population) {
  GenerationRecord record;
  record.generation = generation;
  record.front_size = 0;
  const size_t n = population.empty() ? 0 : population[0].profile.size();
  record.centroid.assign(n, 0.0);
  for (const Individual& ind : population) {
    if (ind.rank != 0) continue;
    ++record.front_size;
    for (size_t i = 0; i < n; ++i) record.centroid[i] += ind.profile[i];
  }
  for (double& c : record.centroid) {
    c /= static_cast<double>(record.front_size);
  }
  record.spread = 0.0;
  for (const Individual& ind : population) {
    if (ind.rank != 0) continue;
    record.spread =
        std::max(record.spread, ProfileDistance(ind.profile, record.centroid));
  }
  return record;
}

}  // namespace

void SolverParams::Validate() const {
  if (population_size < 4 || population_size % 2 != 0) {
    throw InvalidArgument("population size must be even and at least 4");
  }
  if (max_generations < 1) {
    throw InvalidArgument("max generations must be at least 1");
  }
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw InvalidArgument("crossover rate must be in [0, 1]");
  }
  if (mutation_rate > 1.0) {
    throw InvalidArgument("mutation rate must be in [0, 1] (or negative for "
                          "the 1/n default)");
  }
  if (!(crossover_index > 0.0) || !(mutation_index > 0.0)) {
    throw InvalidArgument("distribution indices must be positive");
  }
}

double SolverParams::ResolveMutationRate(const Game& game) const {
  return mutation_rate < 0.0 ? 1.0 / game.players() : mutation_rate;
}

std::vector<std::vector<size_t>> NondominatedSort(
    const Game& game, const Rationality& rationality,
    std::vector<Individual>& population) {
  if (population.empty()) {
    throw InvalidArgument("cannot sort an empty population");
  }
  const size_t n = population.size();
  std::vector<std::vector<size_t>> dominated_by(n);
  std::vector<int> domination_count(n, 0);

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      // Both directions share the same two efficiency scores.
      const int e_ij = RelativeEfficiency(
          game, rationality, population[i].profile, population[i].payoffs,
          population[j].profile, population[j].payoffs);
      const int e_ji = RelativeEfficiency(
          game, rationality, population[j].profile, population[j].payoffs,
          population[i].profile, population[i].payoffs);
      if (e_ji < e_ij) {  // i dominates j
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (e_ij < e_ji) {  // j dominates i
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }

  std::vector<std::vector<size_t>> fronts;
  std::vector<bool> assigned(n, false);
  std::vector<size_t> current;
  for (size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) current.push_back(i);
  }
  int rank = 0;
  while (!current.empty()) {
    for (size_t i : current) {
      population[i].rank = rank;
      assigned[i] = true;
    }
    std::vector<size_t> next;
    for (size_t i : current) {
      for (size_t j : dominated_by[i]) {
        if (--domination_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
    ++rank;
  }

  // The relation is not transitive and can run in circles (a beats b beats
  // c beats a); such members never discharge. They are mutually comparable
  // in cycles with no principled order, so they share one trailing front.
  std::vector<size_t> undischarged;
  for (size_t i = 0; i < n; ++i) {
    if (!assigned[i]) undischarged.push_back(i);
  }
  if (!undischarged.empty()) {
    for (size_t i : undischarged) population[i].rank = rank;
    fronts.push_back(std::move(undischarged));
  }
  return fronts;
}

void AssignCrowding(std::vector<Individual>& population,
                    const std::vector<size_t>& front) {
  for (size_t i : front) population[i].crowding = 0.0;
  if (front.size() <= 2) {
    for (size_t i : front) population[i].crowding = kInfinity;
    return;
  }
  const size_t objectives = population[front[0]].payoffs.size();
  std::vector<size_t> order(front);
  for (size_t obj = 0; obj < objectives; ++obj) {
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (population[a].payoffs[obj] != population[b].payoffs[obj]) {
        return population[a].payoffs[obj] < population[b].payoffs[obj];
      }
      return a < b;
    });
    const double range = population[order.back()].payoffs[obj] -
                         population[order.front()].payoffs[obj];
    if (range <= 0.0) continue;  // degenerate objective contributes nothing
    population[order.front()].crowding = kInfinity;
    population[order.back()].crowding = kInfinity;
    for (size_t k = 1; k + 1 < order.size(); ++k) {
      const double gap = population[order[k + 1]].payoffs[obj] -
                         population[order[k - 1]].payoffs[obj];
      population[order[k]].crowding += gap / range;
    }
  }
}

std::pair<Profile, Profile> MakeOffspring(const Game& game,
                                          const SolverParams& params,
                                          const Profile& parent_a,
                                          const Profile& parent_b, Rng& rng) {
  game.RequireValid(parent_a);
  game.RequireValid(parent_b);
  Profile child_a = parent_a;
  Profile child_b = parent_b;
  const double mutation_rate = params.ResolveMutationRate(game);

  if (game.discrete()) {
    if (rng.Chance(params.crossover_rate)) {
      for (size_t i = 0; i < child_a.size(); ++i) {
        if (rng.Chance(0.5)) std::swap(child_a[i], child_b[i]);
      }
    }
    const int top = game.grid_actions() - 1;
    for (Profile* child : {&child_a, &child_b}) {
      for (double& c : *child) {
        if (rng.Chance(mutation_rate)) c = rng.UniformInt(0, top);
      }
    }
    return {child_a, child_b};
  }

  const double hi = game.channels();
  if (rng.Chance(params.crossover_rate)) {
    for (size_t i = 0; i < child_a.size(); ++i) {
      if (!rng.Chance(0.5)) continue;
      auto [a, b] =
          SbxPair(child_a[i], child_b[i], params.crossover_index, 0.0, hi, rng);
      if (rng.Chance(0.5)) std::swap(a, b);
      child_a[i] = a;
      child_b[i] = b;
    }
  }
  for (Profile* child : {&child_a, &child_b}) {
    for (double& c : *child) {
      if (rng.Chance(mutation_rate)) {
        c = PolynomialMutate(c, params.mutation_index, 0.0, hi, rng);
      }
    }
  }
  return {child_a, child_b};
}

EvolveResult Evolve(const Game& game, const Rationality& rationality,
                    const SolverParams& params) {
  params.Validate();
  if (rationality.size() != game.players()) {
    throw InvalidArgument("rationality profile length does not match the "
                          "player count");
  }
  Rng rng(params.seed);
  const size_t pop_size = static_cast<size_t>(params.population_size);

  std::vector<Individual> population;
  population.reserve(pop_size);
  for (size_t i = 0; i < pop_size; ++i) {
    population.push_back(MakeIndividual(game, RandomProfile(game, rng)));
  }
  for (const auto& front : NondominatedSort(game, rationality, population)) {
    AssignCrowding(population, front);
  }

  RunHistory history;
  history.reserve(static_cast<size_t>(params.max_generations));

  for (int generation = 1; generation <= params.max_generations;
       ++generation) {
    // Variation: binary tournaments pick parents, each pair yields two
    // children, giving exactly population_size offspring.
    std::vector<Individual> merged = population;
    merged.reserve(2 * pop_size);
    while (merged.size() < 2 * pop_size) {
      const size_t a = TournamentWinner(
          population, rng.UniformInt(0, params.population_size - 1),
          rng.UniformInt(0, params.population_size - 1));
      const size_t b = TournamentWinner(
          population, rng.UniformInt(0, params.population_size - 1),
          rng.UniformInt(0, params.population_size - 1));
      auto [child_a, child_b] = MakeOffspring(
          game, params, population[a].profile, population[b].profile, rng);
      merged.push_back(MakeIndividual(game, std::move(child_a)));
      merged.push_back(MakeIndividual(game, std::move(child_b)));
    }

    // Elitist survivor selection over the merged pool.
    const auto fronts = NondominatedSort(game, rationality, merged);
    for (const auto& front : fronts) AssignCrowding(merged, front);

    std::vector<Individual> next;
    next.reserve(pop_size);
    for (const auto& front : fronts) {
      if (next.size() + front.size() <= pop_size) {
        for (size_t i : front) next.push_back(merged[i]);
      } else {
        std::vector<size_t> by_crowding(front);
        std::sort(by_crowding.begin(), by_crowding.end(),
                  [&](size_t a, size_t b) {
                    if (merged[a].crowding != merged[b].crowding) {
                      return merged[a].crowding > merged[b].crowding;
                    }
                    return a < b;
                  });
        for (size_t i : by_crowding) {
          if (next.size() == pop_size) break;
          next.push_back(merged[i]);
        }
      }
      if (next.size() == pop_size) break;
    }
    population = std::move(next);
    history.push_back(SummarizeFront(generation, population));
  }

  // Final front: rank-0 members, deduplicated, in lexicographic order.
  std::vector<Individual> front_members;
  for (const Individual& ind : population) {
    if (ind.rank == 0) front_members.push_back(ind);
  }
  std::sort(front_members.begin(), front_members.end(),
            [](const Individual& a, const Individual& b) {
              return a.profile < b.profile;
            });

  EvolveResult result;
  result.front.kind = EquilibriumSet::Kind::kFrontUnderRationality;
  for (const Individual& ind : front_members) {
    bool duplicate = false;
    for (const Profile& kept : result.front.profiles) {
      if (SameProfile(kept, ind.profile)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      result.front.profiles.push_back(ind.profile);
      result.front.payoffs.push_back(ind.payoffs);
    }
  }
  result.history = std::move(history);
  return result;
}

}  // namespace speq
