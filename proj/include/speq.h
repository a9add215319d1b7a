/* Copyright 2026 The Speq Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* speq - equilibrium detection for simultaneous channel-access games.
 *
 * C API of the shared library. Handles are opaque; every function that can
 * fail returns a speq_status, with a human-readable description of the most
 * recent failure available from speq_last_error() (per thread). Arrays are
 * caller-allocated with one slot per player unless stated otherwise.
 *
 * All operations on created handles are read-only and thread-safe; creation
 * and destruction of a given handle must not race with its use.
 */

#ifndef SPEQ_H
#define SPEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum speq_status {
  SPEQ_OK = 0,
  SPEQ_ERR_INVALID_ARGUMENT = 1, /* bad parameter or invalid profile */
  SPEQ_ERR_UNSUPPORTED = 2,      /* operation undefined for the game kind */
  SPEQ_ERR_RESOURCE_LIMIT = 3,   /* enumeration cap exceeded */
  SPEQ_ERR_PARSE = 4,            /* malformed config, report or token string */
  SPEQ_ERR_IO = 5                /* filesystem failure */
} speq_status;

/* Stable name of a status code, e.g. "invalid-argument". */
const char* speq_status_name(speq_status status);

/* Description of the most recent failure on the calling thread. Never NULL;
 * empty when nothing failed yet. Overwritten by the next failure. */
const char* speq_last_error(void);

/* Frees any string the library handed out through a char** out-parameter. */
void speq_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Games                                                               */
/* ------------------------------------------------------------------ */

typedef struct speq_game speq_game;

/* A symmetric channel-access game: `players` radios choose how many of the
 * `channels` available channels to occupy; a player occupying c of a total
 * C earns max(channels - C, 0)*c - access_cost*c. Continuous games allow
 * any c in [0, channels]; discrete games allow the integers
 * {0..floor(channels)}. Requires players >= 1, channels > 0 and
 * 0 <= access_cost <= channels. */
speq_status speq_game_create_continuous(int players, double channels,
                                        double access_cost, speq_game** out);
speq_status speq_game_create_discrete(int players, double channels,
                                      double access_cost, speq_game** out);
void speq_game_free(speq_game* game);

int speq_game_players(const speq_game* game);
double speq_game_channels(const speq_game* game);
double speq_game_access_cost(const speq_game* game);
int speq_game_is_discrete(const speq_game* game);

/* Non-interfered symbols per channel for a given total occupancy:
 * channels - total when total <= channels, else 0. */
speq_status speq_demand(double total_accessed, double channels, double* out);

/* Payoff of every player for the profile. */
speq_status speq_game_payoff(const speq_game* game, const double* profile,
                             double* payoffs_out);

/* SPEQ_OK when the profile is valid for the game; otherwise
 * SPEQ_ERR_INVALID_ARGUMENT with the violated constraint (coordinate index
 * and value) described by speq_last_error(). */
speq_status speq_game_validate_profile(const speq_game* game,
                                       const double* profile);

/* The closed-form Nash point of a continuous game: every component equals
 * (channels - access_cost) / (players + 1). SPEQ_ERR_UNSUPPORTED for
 * discrete games. */
speq_status speq_game_analytic_nash(const speq_game* game,
                                    double* profile_out);

/* ------------------------------------------------------------------ */
/* Dominance relations                                                 */
/* ------------------------------------------------------------------ */

/* Rationality strings are player-ordered comma-separated tokens, one per
 * player, each N (Nash-biased) or P (Pareto-biased): "N,N,P". Parsing is
 * case-insensitive. */

/* result_out = 1 iff x Pareto-dominates y (weakly better for every player,
 * strictly better for at least one). */
speq_status speq_pareto_dominates(const speq_game* game, const double* x,
                                  const double* y, int* result_out);

/* The relative-efficiency score of x against y under the rationality
 * profile: Nash-biased players that strictly gain by unilaterally adopting
 * their x component, plus the Pareto-biased player count when x
 * Pareto-dominates y. Always in [0, players]. */
speq_status speq_relative_efficiency(const speq_game* game,
                                     const char* rationality, const double* x,
                                     const double* y, int* score_out);

/* result_out = 1 iff x dominates y under the generative relation for the
 * rationality profile (efficiency of y against x strictly below that of x
 * against y). */
speq_status speq_np_dominates(const speq_game* game, const char* rationality,
                              const double* x, const double* y,
                              int* result_out);

/* ------------------------------------------------------------------ */
/* Result fronts                                                       */
/* ------------------------------------------------------------------ */

typedef struct speq_front speq_front;

size_t speq_front_size(const speq_front* front);
int speq_front_players(const speq_front* front);
/* "nash-best-response" or "front-under-rationality". */
const char* speq_front_kind(const speq_front* front);
speq_status speq_front_profile(const speq_front* front, size_t index,
                               double* profile_out);
speq_status speq_front_payoffs(const speq_front* front, size_t index,
                               double* payoffs_out);
void speq_front_free(speq_front* front);

/* Every pure Nash equilibrium of a discrete game by exhaustive
 * best-response check (ties included). profile_cap bounds the grid size;
 * pass 0 for the default of 1e8. */
speq_status speq_exact_nash(const speq_game* game, uint64_t profile_cap,
                            speq_front** out);

/* The full-grid non-dominated set under the generative relation for the
 * rationality profile. */
speq_status speq_exact_front(const speq_game* game, const char* rationality,
                             uint64_t profile_cap, speq_front** out);

/* ------------------------------------------------------------------ */
/* Evolutionary detection                                              */
/* ------------------------------------------------------------------ */

typedef struct speq_solver_params {
  int population_size;   /* even, >= 4 */
  int max_generations;   /* >= 1 */
  double crossover_rate; /* in [0, 1] */
  double mutation_rate;  /* per coordinate; negative = 1/players */
  double crossover_index;
  double mutation_index;
  uint64_t seed;
} speq_solver_params;

/* Fills in the defaults: population 100, 100 generations, crossover 0.9
 * with index 15, per-coordinate mutation 1/players with index 20, seed 1. */
void speq_solver_params_init(speq_solver_params* params);

typedef struct speq_history speq_history;

size_t speq_history_size(const speq_history* history);
/* Per-generation trace: front size, front centroid (one slot per player)
 * and spread (largest max-coordinate distance from the centroid). Any
 * out-pointer may be NULL. */
speq_status speq_history_record(const speq_history* history, size_t index,
                                int* generation_out, size_t* front_size_out,
                                double* centroid_out, double* spread_out);
void speq_history_free(speq_history* history);

/* Evolves a population under the generative relation and returns the final
 * non-dominated front. Deterministic for fixed inputs and seed. params may
 * be NULL for defaults; history_out may be NULL when the per-generation
 * trace is not wanted. */
speq_status speq_evolve(const speq_game* game, const char* rationality,
                        const speq_solver_params* params, speq_front** out,
                        speq_history** history_out);

/* ------------------------------------------------------------------ */
/* Scenarios and reports                                               */
/* ------------------------------------------------------------------ */

typedef struct speq_scenario speq_scenario;

/* A scenario is a JSON document:
 *
 *   {
 *     "game": {"n": 2, "w": 10.0, "k": 1.0, "kind": "continuous"},
 *     "rationality": "N,N",
 *     "mode": "evolve",            // evolve | oracle | both
 *     "solver": { ... },           // optional speq_solver_params fields
 *     "output_dir": "out/run",
 *     "plots": true
 *   }
 */
speq_status speq_scenario_load(const char* path, speq_scenario** out);
speq_status speq_scenario_parse(const char* json_text, speq_scenario** out);

/* Overrides one field by dotted name, e.g. ("solver.seed", "7") or
 * ("game.kind", "discrete"). The value parses as JSON when possible and is
 * taken as a string otherwise. */
speq_status speq_scenario_set(speq_scenario* scenario, const char* dotted_key,
                              const char* value);

typedef struct speq_run_stats {
  size_t front_rows;   /* rows written to report.csv */
  uint64_t seed;
  int generations;     /* 0 for oracle-only runs */
  double wall_seconds;
} speq_run_stats;

/* Runs the scenario and writes report.csv, report.json and, as applicable,
 * history.csv, strategy.svg, payoff.svg and compare.json under the output
 * directory. A non-NULL output_dir overrides the configured one; stats may
 * be NULL. */
speq_status speq_scenario_run(const speq_scenario* scenario,
                              const char* output_dir, speq_run_stats* stats);
void speq_scenario_free(speq_scenario* scenario);

/* Renders a report.json file to an SVG scatter plot of the given space
 * ("strategy" or "payoff"). */
speq_status speq_report_render_svg(const char* report_json_path,
                                   const char* space, const char* out_path);

/* Matches the fronts of two report.json files under a max-coordinate
 * tolerance (negative = 0.05 for continuous games, exact for discrete).
 * Fails when the reports describe different games. Count pointers may be
 * NULL; *summary_json_out (also optional) receives a JSON document listing
 * matched pairs and the rows unique to either side, to be released with
 * speq_string_free(). */
speq_status speq_compare_reports(const char* report_a_path,
                                 const char* report_b_path, double tolerance,
                                 size_t* matched_out, size_t* only_a_out,
                                 size_t* only_b_out, char** summary_json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPEQ_H */
