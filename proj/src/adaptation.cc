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

#include "msnrec/adaptation.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace msnrec {

Activity Activity::Rated(int r) {
  if (r < 1 || r > 5) {
    throw std::invalid_argument("rating must be in 1..5, got " +
                                std::to_string(r));
  }
  return {ActivityKind::kRated, r};
}

std::string Activity::ToString() const {
  switch (kind) {
    case ActivityKind::kViewedProfile:
      return "viewed_profile";
    case ActivityKind::kCommented:
      return "commented";
    case ActivityKind::kAddedToContacts:
      return "added_to_contacts";
    case ActivityKind::kRated:
      return "rated:" + std::to_string(rating);
  }
  return "";
}

Activity Activity::Parse(std::string_view text) {
  if (text == "viewed_profile") return ViewedProfile();
  if (text == "commented") return Commented();
  if (text == "added_to_contacts") return AddedToContacts();
  constexpr std::string_view kRatedPrefix = "rated:";
  if (text.starts_with(kRatedPrefix)) {
    std::string_view digits = text.substr(kRatedPrefix.size());
    int r = 0;
    auto [ptr, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), r);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return Rated(r);
    }
  }
  throw std::invalid_argument("unknown activity '" + std::string(text) + "'");
}

void AdaptationParams::Validate() const {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  for (double a : {importance.viewed_profile, importance.commented,
                   importance.added_to_contacts}) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw std::invalid_argument("activity importance outside [0,1]");
    }
  }
}

double ActivityImportance(const AdaptationParams& params,
                          const Activity& activity) {
  switch (activity.kind) {
    case ActivityKind::kViewedProfile:
      return params.importance.viewed_profile;
    case ActivityKind::kCommented:
      return params.importance.commented;
    case ActivityKind::kAddedToContacts:
      return params.importance.added_to_contacts;
    case ActivityKind::kRated:
      return (activity.rating - 1) / 4.0;
  }
  return 0.0;
}

std::optional<LayerVector> Contribution(const LayerVector& strengths) {
  const double total = Sum(strengths);
  if (!(total > 0.0)) return std::nullopt;
  LayerVector c;
  for (std::size_t i = 0; i < kLayerCount; ++i) c[i] = strengths[i] / total;
  return c;
}

std::optional<LayerVector> Contribution(const MsnSnapshot& snapshot,
                                        const UserId& k, const UserId& j) {
  return Contribution(snapshot.Strengths(k, j));
}

std::optional<LayerVector> RawPersonalUpdate(const LayerVector& old_weights,
                                             const LayerVector& contribution,
                                             double importance,
                                             double epsilon) {
  double denominator = 0.0;
  for (std::size_t m = 0; m < kLayerCount; ++m) {
    denominator +=
        old_weights[m] + contribution[m] * (importance - old_weights[m]);
  }
  if (!(denominator > 0.0)) return std::nullopt;
  LayerVector updated;
  for (std::size_t i = 0; i < kLayerCount; ++i) {
    updated[i] = (old_weights[i] * (1.0 + epsilon) +
                  contribution[i] * (importance - old_weights[i])) /
                 denominator;
  }
  return updated;
}

std::optional<LayerVector> UpdatePersonalWeights(
    const LayerVector& old_weights, const LayerVector& contribution,
    double importance, double epsilon) {
  auto updated =
      RawPersonalUpdate(old_weights, contribution, importance, epsilon);
  if (!updated) return std::nullopt;
  for (double& w : *updated) w = std::clamp(w, 0.0, 1.0);
  const double total = Sum(*updated);
  if (!(total > 0.0)) return std::nullopt;
  for (double& w : *updated) w /= total;
  return updated;
}

LayerVector RecomputeSystemWeights(const WeightState& weights) {
  if (weights.personal.empty()) return weights.system;
  LayerVector mean{};
  for (const auto& [user, w] : weights.personal) {
    for (std::size_t i = 0; i < kLayerCount; ++i) mean[i] += w[i];
  }
  const double n = static_cast<double>(weights.personal.size());
  for (double& x : mean) x /= n;
  return mean;
}

const LayerVector& InitNewUser(WeightState& weights, const UserId& k) {
  auto [it, inserted] = weights.personal.try_emplace(k, weights.system);
  return it->second;
}

}  // namespace msnrec
