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

#ifndef MSNREC_ENGINE_H_
#define MSNREC_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "msnrec/interaction_log.h"
#include "msnrec/layers.h"
#include "msnrec/snapshot.h"
#include "msnrec/weights.h"

namespace msnrec {

// The rotation window holds up to kWindowFactor * L candidates, so one full
// rotation cycle spans at most kWindowFactor requests.
inline constexpr std::size_t kWindowFactor = 3;

struct ScoredCandidate {
  UserId candidate;
  // Score after damping.
  double value = 0.0;
  // Score before damping; equals the sum of `contributions`.
  double raw_value = 0.0;
  // Per-layer addends of the recommendation value.
  LayerVector contributions{};
  bool damped = false;
  std::uint32_t times_shown = 0;

  bool operator==(const ScoredCandidate&) const = default;
};

struct RecommendationList {
  UserId for_user;
  std::uint64_t request_seq = 0;
  std::vector<ScoredCandidate> items;

  bool operator==(const RecommendationList&) const = default;
};

// What user k has been served so far. Exposures of the running rotation
// cycle sit in `cycle_exposures` and are folded into `shown` when the next
// cycle starts, so damping never reorders the window mid-cycle.
struct ViewHistory {
  std::uint64_t request_seq = 0;
  std::map<UserId, std::uint32_t> shown;
  std::vector<UserId> cycle_exposures;

  std::uint32_t TimesShown(const UserId& j) const;

  bool operator==(const ViewHistory&) const = default;
};

struct RecommendParams {
  std::size_t list_length = 3;
  double damping = 0.5;
  // Candidates kept from ranking, in addition to room for k's contacts and
  // blocked users which filtering removes.
  std::size_t pool_size = 500;
};

// Recommendation value of a pair with the given 11 strengths:
//   v = sum_i (system_i + personal_i) * s_i / max_i s_i,
// and 0 when every strength is 0. When `contributions` is non-null it
// receives the per-layer addends.
double RecommendationValue(const LayerVector& system,
                           const LayerVector& personal,
                           const LayerVector& strengths,
                           LayerVector* contributions = nullptr);

// Same, reading strengths of k -> j from the snapshot. Throws LookupError if
// k has no personal weights.
double RecommendationValue(const WeightState& weights,
                           const MsnSnapshot& snapshot, const UserId& k,
                           const UserId& j);

// Users with any nonzero strength from k, by value descending, ties by id
// ascending, truncated to `pool_size`.
std::vector<ScoredCandidate> RankCandidates(const WeightState& weights,
                                            const MsnSnapshot& snapshot,
                                            const UserId& k,
                                            std::size_t pool_size);

// Drops k, k's contacts and k's blocked users; damps every candidate shown
// n times by damping^n and re-sorts.
std::vector<ScoredCandidate> SocialFilter(std::vector<ScoredCandidate> ranked,
                                          const InteractionLog& log,
                                          const ViewHistory& history,
                                          const UserId& k, double damping);

// Requests in one rotation cycle over n filtered candidates: ceil(W / L)
// with W = min(kWindowFactor * L, n), or 1 when n <= L.
std::size_t RotationCycle(std::size_t n, std::size_t list_length);

// Windowed rotation over the top W = min(kWindowFactor * L, n) candidates.
// The window is cut into consecutive slices of L (the last one may be
// shorter) and request seq serves slice seq mod RotationCycle(n, L), so
// every window member is served exactly once per cycle. All candidates are
// returned when n <= L.
RecommendationList Rotate(const std::vector<ScoredCandidate>& filtered,
                          const UserId& k, std::uint64_t request_seq,
                          std::size_t list_length);

// Full pipeline for one request: rank, filter, rotate, then record the
// exposures and advance k's request counter in `history`.
RecommendationList Recommend(const WeightState& weights,
                             const MsnSnapshot& snapshot,
                             const InteractionLog& log, ViewHistory& history,
                             const UserId& k, const RecommendParams& params);

}  // namespace msnrec

#endif  // MSNREC_ENGINE_H_
