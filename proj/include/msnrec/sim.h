// Copyright 2026 The msnrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSNREC_SIM_H_
#define MSNREC_SIM_H_

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "msnrec/adaptation.h"
#include "msnrec/interaction_log.h"
#include "msnrec/layers.h"

namespace msnrec::sim {

enum class LatentFamily {
  // One dominant layer per user holding `peak_mass`; the rest spread by a
  // flat Dirichlet.
  kPeaked,
  // Dirichlet(dirichlet_alpha) over all layers.
  kDirichlet,
};

struct WorldSpec {
  std::uint64_t seed = 1;
  std::size_t n_users = 200;
  std::size_t objects_per_user = 4;
  // Relational acts each user performs; each act targets one layer drawn
  // from the user's latent preferences.
  std::size_t acts_per_user = 12;
  // Probability that an act drawn for a layer of the given kind happens.
  double density_direct = 1.0;
  double density_equal = 1.0;
  double density_different = 1.0;
  // Probability that an act's partner shares the actor's dominant layer.
  double homophily = 0.8;
  // Tags and groups available per community.
  std::size_t pool_size = 12;
  // Chance that a user blocks one random other user.
  double block_probability = 0.02;
  LatentFamily latent_family = LatentFamily::kPeaked;
  double peak_mass = 0.7;
  double dirichlet_alpha = 0.3;
  std::size_t n_raters = 8;
  double noise_sd = 0.1;

  // Throws std::invalid_argument; all-zero densities are infeasible.
  void Validate() const;
};

struct SyntheticRater {
  UserId user;
  // Non-negative, sums to 1.
  LayerVector latent{};
  double noise_sd = 0.0;
};

struct World {
  InteractionLog log;
  // Latent preferences of every user, by user id.
  std::map<UserId, LayerVector> latents;
  std::vector<SyntheticRater> raters;
};

// Deterministic for a given spec. Every produced log passes
// InteractionLog::Validate.
World GenerateWorld(const WorldSpec& spec);

// clamp(sum_i p_i c_i / max_i p_i + N(0, noise_sd), 0, 1).
double SyntheticRating(const SyntheticRater& rater,
                       const LayerVector& contribution, std::mt19937_64& rng);

struct ExperimentOptions {
  std::size_t rounds = 2;
  std::size_t list_length = 3;
  double damping = 0.5;
  AdaptationParams adaptation;
  std::uint64_t recompute_period = 100;
  // Ablation: ratings are collected but weights never change.
  bool freeze_weights = false;
};

struct RaterTrace {
  UserId user;
  LayerVector latent{};
  bool skipped = false;
  // Mean rating of the list served in each round.
  std::vector<double> round_ratings;
  // weights[0] before the first round, weights[r + 1] after round r.
  std::vector<LayerVector> weights;
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  // Mean over all rated items of each round.
  std::vector<double> round_mean_rating;
  LayerVector mean_weights_before{};
  LayerVector mean_weights_after{};
  std::vector<RaterTrace> raters;

  double FirstListMean() const { return round_mean_rating.at(0); }
  double SecondListMean() const { return round_mean_rating.at(1); }
  bool SecondListRatedHigher() const {
    return SecondListMean() > FirstListMean();
  }
};

// Recommend, rate, adapt, repeated `rounds` times for every rater. Each
// round's adaptation is applied after the whole list has been rated.
// Throws std::logic_error if a weight invariant breaks at a round boundary.
ExperimentReport RunExperiment(const WorldSpec& spec,
                               const ExperimentOptions& options);

// Runs seeds spec.seed, spec.seed + 1, ... spec.seed + n_seeds - 1.
std::vector<ExperimentReport> RunSeeds(WorldSpec spec,
                                       const ExperimentOptions& options,
                                       std::size_t n_seeds);

// Fraction of reports whose second list was rated higher than the first.
double ImprovedFraction(const std::vector<ExperimentReport>& reports);

// One row per (seed, round, rater) plus an ALL row per (seed, round).
// Round 0 carries the initial weights and no rating.
void WriteReportCsv(const std::vector<ExperimentReport>& reports,
                    std::ostream& out);

std::string Summarize(const std::vector<ExperimentReport>& reports);

}  // namespace msnrec::sim

#endif  // MSNREC_SIM_H_
