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

#ifndef MSNREC_STATE_H_
#define MSNREC_STATE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "msnrec/engine.h"
#include "msnrec/interaction_log.h"
#include "msnrec/snapshot.h"
#include "msnrec/weights.h"

namespace msnrec {

inline constexpr std::string_view kStateVersion = "msnrec-state/1";

// Everything needed to resume a running system.
struct SystemState {
  InteractionLog log;
  // Bumped on every log mutation.
  std::uint64_t log_version = 0;
  // Immutable once built; replaced wholesale on rebuild.
  std::shared_ptr<const MsnSnapshot> snapshot;
  // log_version the snapshot was built from.
  std::uint64_t snapshot_log_version = 0;
  WeightState weights;
  std::map<UserId, ViewHistory> history;
  // Applied (non-skipped) feedback events since start.
  std::uint64_t feedback_events = 0;

  bool SnapshotStale() const {
    return snapshot != nullptr && snapshot_log_version != log_version;
  }

  // Deep comparison; snapshots compare by content.
  bool operator==(const SystemState& other) const;
};

// JSON document with top-level fields version, log, snapshot,
// system_weights, personal_weights, history and counters. Doubles are
// written in shortest round-trip form, so loading restores every weight
// and strength bit for bit.
std::string StateToText(const SystemState& state);

// Throws VersionError on a missing or different version tag and
// ValidationError on structurally invalid content.
SystemState StateFromText(std::string_view text);

// Writes through a temporary file renamed into place. Throws IoError.
void SaveState(const SystemState& state, const std::filesystem::path& path);
SystemState LoadState(const std::filesystem::path& path);

}  // namespace msnrec

#endif  // MSNREC_STATE_H_
