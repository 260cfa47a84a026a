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

#ifndef MSNREC_SERVICE_H_
#define MSNREC_SERVICE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msnrec/adaptation.h"
#include "msnrec/engine.h"
#include "msnrec/layers.h"
#include "msnrec/state.h"

namespace msnrec {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  // Loaded on start and written on shutdown by `serve`; empty disables.
  std::string state_path;
  std::size_t list_length = 3;
  double damping = 0.5;
  AdaptationParams adaptation;
  // System weights are recomputed after this many applied feedback events.
  std::uint64_t recompute_period = 100;
  std::size_t candidate_pool = 500;
  std::string cors_origin = "*";

  // Throws std::invalid_argument on L < 1, damping outside (0, 1],
  // epsilon < 0, importances outside [0, 1] or a zero period.
  void Validate() const;

  RecommendParams recommend_params() const {
    return {list_length, damping, candidate_pool};
  }
};

// Reads a JSON config; missing fields keep their defaults. Throws IoError
// or std::invalid_argument.
ServiceConfig LoadConfig(const std::filesystem::path& path);
ServiceConfig ParseConfig(std::string_view text);

// Carries the HTTP status the failure maps to.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

enum class IngestMode { kMerge, kReplace };

struct IngestReport {
  std::size_t users = 0;
  std::size_t facts = 0;
  std::size_t new_users = 0;
  bool changed = false;
  std::uint64_t log_version = 0;
};

struct BuildReport {
  std::uint64_t built_at = 0;
  std::size_t users = 0;
  std::array<std::size_t, kLayerCount> edge_counts{};
};

struct FeedbackResult {
  UserId actor;
  UserId target;
  Activity activity;
  double importance = 0.0;
  bool skipped = false;
  std::string skip_reason;
  std::optional<LayerVector> contribution;
  LayerVector old_weights{};
  LayerVector new_weights{};
  bool contact_added = false;
  bool system_recomputed = false;
};

struct WeightsView {
  UserId user;
  LayerVector system{};
  LayerVector personal{};
};

struct LayerInfo {
  LayerId id;
  LayerKind kind;
  std::size_t edge_count = 0;
};

struct HealthInfo {
  std::size_t users = 0;
  bool has_snapshot = false;
  std::uint64_t snapshot_built_at = 0;
  bool snapshot_stale = false;
  std::uint64_t log_version = 0;
  std::uint64_t feedback_events = 0;
};

// The recommendation system behind both the HTTP API and the CLI.
//
// Thread-safe. Ingest, rebuild, recompute, state import and contact-adding
// feedback take the state lock exclusively; recommendations, other feedback
// and reads share it and serialize per user through a per-user mutex.
class RecommenderService {
 public:
  explicit RecommenderService(ServiceConfig config);
  RecommenderService(ServiceConfig config, SystemState state);

  const ServiceConfig& config() const { return config_; }

  // Parse errors propagate as ParseError.
  IngestReport Ingest(std::string_view log_text, IngestMode mode);
  // 503 when no users have been ingested.
  BuildReport Rebuild();

  // 404 unknown user, 503 no snapshot, 400 for a zero list length.
  RecommendationList Recommend(const UserId& k,
                               std::optional<std::size_t> list_length = {});

  // 404 unknown users, 409 k == j, 503 no snapshot. A pair without any
  // relation is reported as skipped rather than failed.
  FeedbackResult Feedback(const UserId& k, const UserId& j,
                          const Activity& activity);

  WeightsView Weights(const UserId& k) const;
  LayerVector RecomputeSystem();
  std::vector<LayerInfo> Layers() const;
  HealthInfo Health() const;

  SystemState ExportState() const;
  void ImportState(SystemState state);
  void SaveTo(const std::filesystem::path& path) const;
  void LoadFrom(const std::filesystem::path& path);

 private:
  // Requires the exclusive lock.
  void InitUsersLocked();
  void RequireUser(const UserId& k) const;
  std::mutex& UserMutex(const UserId& k) const;

  ServiceConfig config_;
  mutable std::shared_mutex state_mutex_;
  SystemState state_;
  std::map<UserId, std::unique_ptr<std::mutex>> user_mutexes_;
};

}  // namespace msnrec

#endif  // MSNREC_SERVICE_H_
