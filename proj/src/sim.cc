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

#include "msnrec/sim.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "msnrec/engine.h"
#include "msnrec/snapshot.h"
#include "msnrec/weights.h"

namespace msnrec::sim {
namespace {

using Rng = std::mt19937_64;

std::size_t Pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool Chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::size_t ArgMax(const LayerVector& v) {
  return static_cast<std::size_t>(
      std::max_element(v.begin(), v.end()) - v.begin());
}

// Normalized draw from Dirichlet(alpha) over `n` components.
std::vector<double> Dirichlet(Rng& rng, std::size_t n, double alpha) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::vector<double> x(n);
  double total = 0.0;
  for (double& v : x) {
    v = gamma(rng);
    total += v;
  }
  if (!(total > 0.0)) {
    std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(n));
    return x;
  }
  for (double& v : x) v /= total;
  return x;
}

LayerVector DrawLatent(Rng& rng, const WorldSpec& spec) {
  LayerVector p{};
  if (spec.latent_family == LatentFamily::kDirichlet) {
    auto x = Dirichlet(rng, kLayerCount, spec.dirichlet_alpha);
    std::copy(x.begin(), x.end(), p.begin());
    return p;
  }
  const std::size_t dominant = Pick(rng, kLayerCount);
  auto rest = Dirichlet(rng, kLayerCount - 1, 1.0);
  for (std::size_t i = 0, r = 0; i < kLayerCount; ++i) {
    p[i] = i == dominant ? spec.peak_mass : (1.0 - spec.peak_mass) * rest[r++];
  }
  return p;
}

double KindDensity(const WorldSpec& spec, LayerId layer) {
  switch (KindOf(layer)) {
    case LayerKind::kDirectIntentional:
      return spec.density_direct;
    case LayerKind::kObjectEqualRoles:
      return spec.density_equal;
    case LayerKind::kObjectDifferentRoles:
      return spec.density_different;
  }
  return 0.0;
}

class WorldBuilder {
 public:
  WorldBuilder(const WorldSpec& spec, Rng& rng) : spec_(spec), rng_(rng) {}

  World Build() {
    const int width =
        static_cast<int>(std::to_string(spec_.n_users - 1).size());
    for (std::size_t u = 0; u < spec_.n_users; ++u) {
      std::ostringstream id;
      id << 'u' << std::setw(width) << std::setfill('0') << u;
      ids_.push_back(id.str());
      world_.log.users.insert(ids_.back());
    }
    community_.resize(kLayerCount);
    for (std::size_t u = 0; u < spec_.n_users; ++u) {
      LayerVector p = DrawLatent(rng_, spec_);
      world_.latents[ids_[u]] = p;
      dominant_.push_back(ArgMax(p));
      community_[dominant_.back()].push_back(u);
      latents_.push_back(p);
    }
    objects_.resize(spec_.n_users);
    for (std::size_t u = 0; u < spec_.n_users; ++u) {
      for (std::size_t n = 0; n < spec_.objects_per_user; ++n) {
        objects_[u].push_back("o" + ids_[u].substr(1) + "_" +
                              std::to_string(n));
        world_.log.authored[ids_[u]].insert(objects_[u].back());
      }
    }

    for (std::size_t u = 0; u < spec_.n_users; ++u) {
      std::discrete_distribution<std::size_t> layer_of(latents_[u].begin(),
                                                       latents_[u].end());
      for (std::size_t a = 0; a < spec_.acts_per_user; ++a) {
        const auto layer = static_cast<LayerId>(layer_of(rng_));
        if (!Chance(rng_, KindDensity(spec_, layer))) continue;
        Act(u, layer);
      }
      if (spec_.n_users > 1 && Chance(rng_, spec_.block_probability)) {
        const std::size_t v = Other(u);
        if (!world_.log.Contacts(ids_[u]).contains(ids_[v])) {
          world_.log.blocked[ids_[u]].insert(ids_[v]);
        }
      }
    }

    std::vector<std::size_t> order(spec_.n_users);
    for (std::size_t u = 0; u < order.size(); ++u) order[u] = u;
    std::shuffle(order.begin(), order.end(), rng_);
    const std::size_t n_raters = std::min(spec_.n_raters, spec_.n_users);
    std::sort(order.begin(), order.begin() + n_raters);
    for (std::size_t r = 0; r < n_raters; ++r) {
      const std::size_t u = order[r];
      world_.raters.push_back({ids_[u], latents_[u], spec_.noise_sd});
    }
    world_.log.Validate();
    return std::move(world_);
  }

 private:
  // Uniform over everybody but u.
  std::size_t Other(std::size_t u) {
    std::size_t v = Pick(rng_, spec_.n_users - 1);
    return v >= u ? v + 1 : v;
  }

  // A partner for u: from u's community with probability `homophily`,
  // otherwise anybody. Never u itself.
  std::size_t Partner(std::size_t u) {
    const auto& peers = community_[dominant_[u]];
    if (peers.size() > 1 && Chance(rng_, spec_.homophily)) {
      while (true) {
        std::size_t v = peers[Pick(rng_, peers.size())];
        if (v != u) return v;
      }
    }
    return Other(u);
  }

  std::string PoolItem(char prefix, std::size_t u) {
    std::size_t c = dominant_[u];
    if (!Chance(rng_, spec_.homophily)) c = Pick(rng_, kLayerCount);
    return std::string(1, prefix) + std::to_string(c) + "_" +
           std::to_string(Pick(rng_, spec_.pool_size));
  }

  // A random object authored by v, or empty if v has none.
  std::string ObjectOf(std::size_t v) {
    if (objects_[v].empty()) return {};
    return objects_[v][Pick(rng_, objects_[v].size())];
  }

  void Add(Relation& relation, std::size_t u, const std::string& item) {
    if (!item.empty()) relation[ids_[u]].insert(item);
  }

  void AddContact(std::size_t from, std::size_t to) {
    if (from == to) return;
    if (world_.log.Blocked(ids_[from]).contains(ids_[to])) return;
    world_.log.contacts[ids_[from]].insert(ids_[to]);
  }

  void Act(std::size_t u, LayerId layer) {
    if (spec_.n_users < 2) return;
    InteractionLog& log = world_.log;
    const std::size_t j = Partner(u);
    switch (layer) {
      case LayerId::kTag:
        Add(log.tags_used, u, PoolItem('t', u));
        break;
      case LayerId::kGroup:
        Add(log.groups, u, PoolItem('g', u));
        break;
      case LayerId::kFavFav:
      case LayerId::kOpOp: {
        // Both act on an object of a third user, who is also a partner.
        const std::string o = ObjectOf(Partner(u));
        Relation& r = layer == LayerId::kFavFav ? log.favourites : log.opinions;
        Add(r, u, o);
        Add(r, j, o);
        break;
      }
      case LayerId::kFavAuthor:
        Add(log.favourites, u, ObjectOf(j));
        break;
      case LayerId::kAuthorFav:
        Add(log.favourites, j, ObjectOf(u));
        break;
      case LayerId::kOpAuthor:
        Add(log.opinions, u, ObjectOf(j));
        break;
      case LayerId::kAuthorOp:
        Add(log.opinions, j, ObjectOf(u));
        break;
      case LayerId::kContactDirect:
        AddContact(u, j);
        break;
      case LayerId::kContactCommon: {
        const std::size_t z = Partner(u);
        if (z == j) break;
        AddContact(z, u);
        AddContact(z, j);
        break;
      }
      case LayerId::kContactTransitive: {
        const std::size_t z = Partner(u);
        if (z == j) break;
        AddContact(u, z);
        AddContact(z, j);
        break;
      }
    }
  }

  const WorldSpec& spec_;
  Rng& rng_;
  World world_;
  std::vector<UserId> ids_;
  std::vector<LayerVector> latents_;
  std::vector<std::size_t> dominant_;
  std::vector<std::vector<std::size_t>> community_;
  std::vector<std::vector<ObjectId>> objects_;
};

void CheckWeights(const WeightState& weights, const char* when) {
  if (!IsWeightVector(weights.system)) {
    throw std::logic_error(std::string("system weights invalid ") + when);
  }
  for (const auto& [user, w] : weights.personal) {
    if (!IsWeightVector(w)) {
      throw std::logic_error("personal weights of " + user + " invalid " +
                             when);
    }
  }
}

LayerVector MeanOf(const std::vector<LayerVector>& vs) {
  LayerVector mean{};
  if (vs.empty()) return mean;
  for (const LayerVector& v : vs) {
    for (std::size_t i = 0; i < kLayerCount; ++i) mean[i] += v[i];
  }
  for (double& x : mean) x /= static_cast<double>(vs.size());
  return mean;
}

}  // namespace

void WorldSpec::Validate() const {
  if (n_users < 2) throw std::invalid_argument("n_users must be >= 2");
  for (double d : {density_direct, density_equal, density_different,
                   homophily, block_probability}) {
    if (!(d >= 0.0 && d <= 1.0)) {
      throw std::invalid_argument("densities and probabilities in [0,1]");
    }
  }
  if (density_direct == 0.0 && density_equal == 0.0 &&
      density_different == 0.0) {
    throw std::invalid_argument("all activity densities are zero");
  }
  if (acts_per_user == 0) throw std::invalid_argument("acts_per_user is 0");
  if (pool_size == 0) throw std::invalid_argument("pool_size is 0");
  if (!(peak_mass > 0.0 && peak_mass <= 1.0)) {
    throw std::invalid_argument("peak_mass must be in (0,1]");
  }
  if (!(dirichlet_alpha > 0.0)) {
    throw std::invalid_argument("dirichlet_alpha must be > 0");
  }
  if (!(noise_sd >= 0.0)) throw std::invalid_argument("noise_sd must be >= 0");
}

World GenerateWorld(const WorldSpec& spec) {
  spec.Validate();
  Rng rng(spec.seed);
  return WorldBuilder(spec, rng).Build();
}

double SyntheticRating(const SyntheticRater& rater,
                       const LayerVector& contribution, Rng& rng) {
  const double peak =
      *std::max_element(rater.latent.begin(), rater.latent.end());
  double match = 0.0;
  for (std::size_t i = 0; i < kLayerCount; ++i) {
    match += rater.latent[i] * contribution[i];
  }
  double a = peak > 0.0 ? match / peak : 0.0;
  if (rater.noise_sd > 0.0) {
    a += std::normal_distribution<double>(0.0, rater.noise_sd)(rng);
  }
  return std::clamp(a, 0.0, 1.0);
}

ExperimentReport RunExperiment(const WorldSpec& spec,
                               const ExperimentOptions& options) {
  if (options.rounds < 2) throw std::invalid_argument("rounds must be >= 2");
  if (options.list_length < 1) {
    throw std::invalid_argument("list_length must be >= 1");
  }
  options.adaptation.Validate();

  const World world = GenerateWorld(spec);
  const MsnSnapshot snapshot = BuildLayers(world.log);
  WeightState weights;
  for (const UserId& u : world.log.users) InitNewUser(weights, u);
  std::map<UserId, ViewHistory> history;

  std::seed_seq rating_seed{spec.seed, std::uint64_t{0x5eed}};
  Rng rating_rng(rating_seed);
  const RecommendParams params{options.list_length, options.damping, 500};

  ExperimentReport report;
  report.seed = spec.seed;
  for (const SyntheticRater& r : world.raters) {
    RaterTrace trace;
    trace.user = r.user;
    trace.latent = r.latent;
    trace.weights.push_back(weights.Personal(r.user));
    report.raters.push_back(std::move(trace));
  }

  std::uint64_t events = 0;
  for (std::size_t round = 0; round < options.rounds; ++round) {
    double round_total = 0.0;
    std::size_t round_items = 0;
    for (std::size_t r = 0; r < world.raters.size(); ++r) {
      const SyntheticRater& rater = world.raters[r];
      RaterTrace& trace = report.raters[r];
      if (trace.skipped) continue;
      const UserId& k = rater.user;

      RecommendationList list = Recommend(weights, snapshot, world.log,
                                          history[k], k, params);
      if (list.items.empty()) {
        if (round == 0) trace.skipped = true;
        trace.round_ratings.push_back(0.0);
        trace.weights.push_back(weights.Personal(k));
        continue;
      }

      // Rate the whole list first, then adapt.
      std::vector<std::pair<LayerVector, double>> feedback;
      double total = 0.0;
      for (const ScoredCandidate& item : list.items) {
        const auto c = Contribution(snapshot, k, item.candidate);
        const double a = SyntheticRating(rater, *c, rating_rng);
        feedback.emplace_back(*c, a);
        total += a;
      }
      trace.round_ratings.push_back(total /
                                    static_cast<double>(list.items.size()));
      round_total += total;
      round_items += list.items.size();

      if (!options.freeze_weights) {
        for (const auto& [c, a] : feedback) {
          LayerVector& personal = weights.Personal(k);
          if (auto updated = UpdatePersonalWeights(
                  personal, c, a, options.adaptation.epsilon)) {
            personal = *updated;
            if (++events % options.recompute_period == 0) {
              weights.system = RecomputeSystemWeights(weights);
            }
          }
        }
      }
      trace.weights.push_back(weights.Personal(k));
    }
    CheckWeights(weights, "at round boundary");
    report.round_mean_rating.push_back(
        round_items ? round_total / static_cast<double>(round_items) : 0.0);
  }

  std::vector<LayerVector> before, after;
  for (const RaterTrace& trace : report.raters) {
    if (trace.skipped) continue;
    before.push_back(trace.weights.front());
    after.push_back(trace.weights.back());
  }
  report.mean_weights_before = MeanOf(before);
  report.mean_weights_after = MeanOf(after);
  return report;
}

std::vector<ExperimentReport> RunSeeds(WorldSpec spec,
                                       const ExperimentOptions& options,
                                       std::size_t n_seeds) {
  std::vector<ExperimentReport> reports;
  const std::uint64_t first = spec.seed;
  for (std::size_t s = 0; s < n_seeds; ++s) {
    spec.seed = first + s;
    reports.push_back(RunExperiment(spec, options));
  }
  return reports;
}

double ImprovedFraction(const std::vector<ExperimentReport>& reports) {
  if (reports.empty()) return 0.0;
  std::size_t improved = 0;
  for (const auto& r : reports) improved += r.SecondListRatedHigher();
  return static_cast<double>(improved) / static_cast<double>(reports.size());
}

void WriteReportCsv(const std::vector<ExperimentReport>& reports,
                    std::ostream& out) {
  out << "seed,round,rater,dominant_layer,mean_rating";
  for (LayerId layer : kAllLayers) out << ",w_" << LayerName(layer);
  out << '\n';
  out << std::setprecision(17);
  auto row = [&](std::uint64_t seed, std::size_t round, const std::string& who,
                 const std::string& dominant, const std::string& rating,
                 const LayerVector& w) {
    out << seed << ',' << round << ',' << who << ',' << dominant << ','
        << rating;
    for (double x : w) out << ',' << x;
    out << '\n';
  };
  auto fmt = [](double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
  };
  for (const ExperimentReport& report : reports) {
    const std::size_t rounds = report.round_mean_rating.size();
    for (std::size_t round = 0; round <= rounds; ++round) {
      std::vector<LayerVector> ws;
      for (const RaterTrace& t : report.raters) {
        if (t.skipped) continue;
        const std::string dominant(
            LayerName(static_cast<LayerId>(ArgMax(t.latent))));
        row(report.seed, round, t.user, dominant,
            round == 0 ? "" : fmt(t.round_ratings[round - 1]),
            t.weights[round]);
        ws.push_back(t.weights[round]);
      }
      row(report.seed, round, "ALL", "",
          round == 0 ? "" : fmt(report.round_mean_rating[round - 1]),
          MeanOf(ws));
    }
  }
}

std::string Summarize(const std::vector<ExperimentReport>& reports) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  double first = 0.0, second = 0.0;
  for (const ExperimentReport& r : reports) {
    std::size_t skipped = 0;
    for (const auto& t : r.raters) skipped += t.skipped;
    out << "seed " << r.seed << ": first list " << r.FirstListMean()
        << ", second list " << r.SecondListMean();
    if (skipped > 0) out << " (" << skipped << " raters skipped)";
    out << '\n';
    first += r.FirstListMean();
    second += r.SecondListMean();
  }
  if (!reports.empty()) {
    const double n = static_cast<double>(reports.size());
    out << "mean rating: first list " << first / n << ", second list "
        << second / n << '\n';
    out << "seeds with second list rated higher: "
        << ImprovedFraction(reports) * 100.0 << "%\n";
    LayerVector before{}, after{};
    for (const auto& r : reports) {
      for (std::size_t i = 0; i < kLayerCount; ++i) {
        before[i] += r.mean_weights_before[i] / n;
        after[i] += r.mean_weights_after[i] / n;
      }
    }
    out << "mean personal weights (before -> after):\n";
    for (LayerId layer : kAllLayers) {
      out << "  " << std::left << std::setw(18) << LayerName(layer)
          << std::right << before[Index(layer)] << " -> "
          << after[Index(layer)] << '\n';
    }
  }
  return out.str();
}

}  // namespace msnrec::sim
