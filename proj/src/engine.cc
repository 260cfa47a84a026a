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

#include "msnrec/engine.h"

#include <algorithm>
#include <cmath>

namespace msnrec {
namespace {

bool ByValueThenId(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.candidate < b.candidate;
}

void FoldCycle(ViewHistory& history) {
  for (const UserId& j : history.cycle_exposures) ++history.shown[j];
  history.cycle_exposures.clear();
}

}  // namespace

std::uint32_t ViewHistory::TimesShown(const UserId& j) const {
  auto it = shown.find(j);
  return it == shown.end() ? 0 : it->second;
}

double RecommendationValue(const LayerVector& system,
                           const LayerVector& personal,
                           const LayerVector& strengths,
                           LayerVector* contributions) {
  const double max_strength =
      *std::max_element(strengths.begin(), strengths.end());
  if (contributions != nullptr) contributions->fill(0.0);
  if (!(max_strength > 0.0)) return 0.0;
  double value = 0.0;
  for (std::size_t i = 0; i < kLayerCount; ++i) {
    const double term =
        (system[i] + personal[i]) * (strengths[i] / max_strength);
    if (contributions != nullptr) (*contributions)[i] = term;
    value += term;
  }
  return value;
}

double RecommendationValue(const WeightState& weights,
                           const MsnSnapshot& snapshot, const UserId& k,
                           const UserId& j) {
  return RecommendationValue(weights.system, weights.Personal(k),
                             snapshot.Strengths(k, j));
}

std::vector<ScoredCandidate> RankCandidates(const WeightState& weights,
                                            const MsnSnapshot& snapshot,
                                            const UserId& k,
                                            std::size_t pool_size) {
  const LayerVector& personal = weights.Personal(k);

  // Gather all strengths from k in one pass over k's rows.
  std::map<UserId, LayerVector> strengths;
  for (LayerId layer : kAllLayers) {
    const MsnSnapshot::Row* row = snapshot.OutEdges(layer, k);
    if (row == nullptr) continue;
    for (const auto& [j, s] : *row) {
      auto [it, inserted] = strengths.try_emplace(j, LayerVector{});
      it->second[Index(layer)] = s;
    }
  }

  std::vector<ScoredCandidate> ranked;
  ranked.reserve(strengths.size());
  for (const auto& [j, s] : strengths) {
    ScoredCandidate c;
    c.candidate = j;
    c.raw_value =
        RecommendationValue(weights.system, personal, s, &c.contributions);
    c.value = c.raw_value;
    ranked.push_back(std::move(c));
  }
  std::sort(ranked.begin(), ranked.end(), ByValueThenId);
  if (ranked.size() > pool_size) ranked.resize(pool_size);
  return ranked;
}

std::vector<ScoredCandidate> SocialFilter(std::vector<ScoredCandidate> ranked,
                                          const InteractionLog& log,
                                          const ViewHistory& history,
                                          const UserId& k, double damping) {
  const IdSet& contacts = log.Contacts(k);
  const IdSet& blocked = log.Blocked(k);
  std::erase_if(ranked, [&](const ScoredCandidate& c) {
    return c.candidate == k || contacts.contains(c.candidate) ||
           blocked.contains(c.candidate);
  });
  for (ScoredCandidate& c : ranked) {
    c.times_shown = history.TimesShown(c.candidate);
    if (c.times_shown > 0) {
      c.value = c.raw_value * std::pow(damping, c.times_shown);
      c.damped = true;
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(), ByValueThenId);
  return ranked;
}

std::size_t RotationCycle(std::size_t n, std::size_t list_length) {
  if (n <= list_length) return 1;
  const std::size_t window = std::min(kWindowFactor * list_length, n);
  return (window + list_length - 1) / list_length;
}

RecommendationList Rotate(const std::vector<ScoredCandidate>& filtered,
                          const UserId& k, std::uint64_t request_seq,
                          std::size_t list_length) {
  RecommendationList list;
  list.for_user = k;
  list.request_seq = request_seq;
  const std::size_t n = filtered.size();
  if (n <= list_length) {
    list.items = filtered;
    return list;
  }
  const std::size_t window = std::min(kWindowFactor * list_length, n);
  const std::size_t slice =
      static_cast<std::size_t>(request_seq % RotationCycle(n, list_length));
  const std::size_t begin = slice * list_length;
  const std::size_t end = std::min(begin + list_length, window);
  list.items.assign(filtered.begin() + begin, filtered.begin() + end);
  return list;
}

RecommendationList Recommend(const WeightState& weights,
                             const MsnSnapshot& snapshot,
                             const InteractionLog& log, ViewHistory& history,
                             const UserId& k, const RecommendParams& params) {
  const std::size_t pool = params.pool_size + log.Contacts(k).size() +
                           log.Blocked(k).size() + 1;
  const auto ranked = RankCandidates(weights, snapshot, k, pool);
  auto filtered = SocialFilter(ranked, log, history, k, params.damping);
  // The filtered size does not depend on the history, so the cycle length
  // is known before the previous cycle's exposures are folded in.
  const std::size_t cycle = RotationCycle(filtered.size(), params.list_length);
  if (history.request_seq % cycle == 0 && !history.cycle_exposures.empty()) {
    FoldCycle(history);
    filtered = SocialFilter(ranked, log, history, k, params.damping);
  }
  RecommendationList list =
      Rotate(filtered, k, history.request_seq, params.list_length);

  for (const ScoredCandidate& c : list.items) {
    history.cycle_exposures.push_back(c.candidate);
  }
  ++history.request_seq;
  return list;
}

}  // namespace msnrec
