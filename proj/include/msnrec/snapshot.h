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

#ifndef MSNREC_SNAPSHOT_H_
#define MSNREC_SNAPSHOT_H_

#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "msnrec/interaction_log.h"
#include "msnrec/layers.h"

namespace msnrec {

// Per-layer sparse directed strengths s(layer, k -> j) in (0, 1]. Absent
// entries are zero; self-edges are never stored.
class MsnSnapshot {
 public:
  using Row = std::map<UserId, double>;
  using LayerEdges = std::map<UserId, Row>;

  MsnSnapshot() = default;
  explicit MsnSnapshot(std::uint64_t built_at) : built_at_(built_at) {}

  // Stores `strength`; zero erases. Throws ValidationError for self-edges
  // and values outside [0, 1].
  void Set(LayerId layer, const UserId& k, const UserId& j, double strength);

  double Strength(LayerId layer, const UserId& k, const UserId& j) const;
  LayerVector Strengths(const UserId& k, const UserId& j) const;

  // Nullptr if k has no outgoing edge on `layer`.
  const Row* OutEdges(LayerId layer, const UserId& k) const;

  // Every j with a nonzero strength from k on some layer.
  std::set<UserId> Neighbours(const UserId& k) const;

  const LayerEdges& Edges(LayerId layer) const { return layers_[Index(layer)]; }
  std::size_t EdgeCount(LayerId layer) const;
  std::size_t TotalEdgeCount() const;

  std::uint64_t built_at() const { return built_at_; }

  bool operator==(const MsnSnapshot&) const = default;

 private:
  std::array<LayerEdges, kLayerCount> layers_;
  std::array<std::size_t, kLayerCount> edge_counts_{};
  std::uint64_t built_at_ = 0;
};

// Directed strength from k to j on `layer`, computed straight from the log
// by set intersection. Ratios are normalized by k's own activity set; a
// zero-sized denominator yields 0. Throws LookupError for unknown users and
// ValidationError when k == j.
double ComputeLayerStrength(const InteractionLog& log, LayerId layer,
                            const UserId& k, const UserId& j);

// Builds every layer through inverted indexes. Produces exactly the values
// ComputeLayerStrength gives for each ordered pair, zeros dropped.
MsnSnapshot BuildLayers(const InteractionLog& log, std::uint64_t built_at = 1);

}  // namespace msnrec

#endif  // MSNREC_SNAPSHOT_H_
