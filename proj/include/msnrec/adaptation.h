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

#ifndef MSNREC_ADAPTATION_H_
#define MSNREC_ADAPTATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "msnrec/interaction_log.h"
#include "msnrec/layers.h"
#include "msnrec/snapshot.h"
#include "msnrec/weights.h"

namespace msnrec {

enum class ActivityKind {
  kViewedProfile,
  kCommented,
  kAddedToContacts,
  kRated,
};

// An activity of user k toward a recommended user j. `rating` is meaningful
// only for kRated and lies in 1..5.
struct Activity {
  ActivityKind kind = ActivityKind::kViewedProfile;
  int rating = 0;

  static Activity ViewedProfile() { return {ActivityKind::kViewedProfile, 0}; }
  static Activity Commented() { return {ActivityKind::kCommented, 0}; }
  static Activity AddedToContacts() {
    return {ActivityKind::kAddedToContacts, 0};
  }
  // Throws std::invalid_argument unless 1 <= r <= 5.
  static Activity Rated(int r);

  // Text form: viewed_profile, commented, added_to_contacts, rated:<r>.
  std::string ToString() const;
  // Throws std::invalid_argument on unknown text.
  static Activity Parse(std::string_view text);

  bool operator==(const Activity&) const = default;
};

struct FeedbackEvent {
  UserId actor;
  UserId target;
  Activity activity;
  std::uint64_t at = 0;
};

// Importances of the non-rating activities; ratings map to (r - 1) / 4.
struct ImportanceTable {
  double viewed_profile = 0.3;
  double commented = 0.6;
  double added_to_contacts = 1.0;

  bool operator==(const ImportanceTable&) const = default;
};

struct AdaptationParams {
  double epsilon = 0.01;
  ImportanceTable importance;

  // Throws std::invalid_argument for epsilon < 0 or importances outside
  // [0, 1].
  void Validate() const;

  bool operator==(const AdaptationParams&) const = default;
};

double ActivityImportance(const AdaptationParams& params,
                          const Activity& activity);

// Share of each layer in the total strength of a pair. Empty when all
// strengths are zero: such feedback carries no layer signal.
std::optional<LayerVector> Contribution(const LayerVector& strengths);
std::optional<LayerVector> Contribution(const MsnSnapshot& snapshot,
                                        const UserId& k, const UserId& j);

// The personal-weight update exactly as published:
//
//   w_i' = [w_i (1 + eps) + c_i (a - w_i)] / sum_m [w_m + c_m (a - w_m)]
//
// No clamping or renormalization; for eps > 0 the result sums to slightly
// more than 1. Empty when the denominator is not positive.
std::optional<LayerVector> RawPersonalUpdate(const LayerVector& old_weights,
                                             const LayerVector& contribution,
                                             double importance,
                                             double epsilon);

// RawPersonalUpdate, then each component clamped to [0, 1] and the vector
// rescaled to sum 1. Empty when the update is rejected.
std::optional<LayerVector> UpdatePersonalWeights(
    const LayerVector& old_weights, const LayerVector& contribution,
    double importance, double epsilon);

// Arithmetic mean of all personal vectors, summed in user-id order. Returns
// the current system vector when nobody has personal weights.
LayerVector RecomputeSystemWeights(const WeightState& weights);

// Gives k a copy of the current system vector unless k already has one.
// Returns k's personal vector.
const LayerVector& InitNewUser(WeightState& weights, const UserId& k);

}  // namespace msnrec

#endif  // MSNREC_ADAPTATION_H_
