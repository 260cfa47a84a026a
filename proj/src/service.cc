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

#include "msnrec/service.h"

#include <atomic>
#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "json.hpp"
#include "msnrec/errors.h"
#include "msnrec/log_io.h"

namespace msnrec {

void ServiceConfig::Validate() const {
  if (list_length < 1) throw std::invalid_argument("list_length must be >= 1");
  if (!(damping > 0.0 && damping <= 1.0)) {
    throw std::invalid_argument("damping must be in (0, 1]");
  }
  if (recompute_period < 1) {
    throw std::invalid_argument("recompute_period must be >= 1");
  }
  if (candidate_pool < 1) {
    throw std::invalid_argument("candidate_pool must be >= 1");
  }
  if (port < 0 || port > 65535) throw std::invalid_argument("bad port");
  adaptation.Validate();
}

ServiceConfig ParseConfig(std::string_view text) {
  ServiceConfig config;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    config.host = j.value("host", config.host);
    config.port = j.value("port", config.port);
    config.state_path = j.value("state_path", config.state_path);
    config.list_length = j.value("list_length", config.list_length);
    config.damping = j.value("damping", config.damping);
    config.adaptation.epsilon = j.value("epsilon", config.adaptation.epsilon);
    if (j.contains("importance")) {
      const auto& imp = j["importance"];
      auto& table = config.adaptation.importance;
      table.viewed_profile = imp.value("viewed_profile", table.viewed_profile);
      table.commented = imp.value("commented", table.commented);
      table.added_to_contacts =
          imp.value("added_to_contacts", table.added_to_contacts);
    }
    config.recompute_period =
        j.value("recompute_period", config.recompute_period);
    config.candidate_pool = j.value("candidate_pool", config.candidate_pool);
    config.cors_origin = j.value("cors_origin", config.cors_origin);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  config.Validate();
  return config;
}

ServiceConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

RecommenderService::RecommenderService(ServiceConfig config)
    : RecommenderService(std::move(config), SystemState{}) {}

RecommenderService::RecommenderService(ServiceConfig config, SystemState state)
    : config_(std::move(config)), state_(std::move(state)) {
  config_.Validate();
  InitUsersLocked();
}

void RecommenderService::InitUsersLocked() {
  for (const UserId& u : state_.log.users) {
    InitNewUser(state_.weights, u);
    state_.history.try_emplace(u);
    if (!user_mutexes_.contains(u)) {
      user_mutexes_.emplace(u, std::make_unique<std::mutex>());
    }
  }
}

void RecommenderService::RequireUser(const UserId& k) const {
  if (!state_.log.HasUser(k)) {
    throw ServiceError(404, "unknown user '" + k + "'");
  }
}

std::mutex& RecommenderService::UserMutex(const UserId& k) const {
  return *user_mutexes_.at(k);
}

IngestReport RecommenderService::Ingest(std::string_view log_text,
                                        IngestMode mode) {
  InteractionLog incoming = ParseLog(log_text);
  std::unique_lock lock(state_mutex_);

  InteractionLog next;
  if (mode == IngestMode::kMerge) next = state_.log;
  MergeInto(next, incoming);
  next.Validate();

  IngestReport report;
  for (const UserId& u : next.users) {
    if (!state_.log.HasUser(u)) ++report.new_users;
  }
  report.changed = !(next == state_.log);
  if (report.changed) {
    if (mode == IngestMode::kReplace) {
      std::erase_if(state_.weights.personal,
                    [&](const auto& kv) { return !next.HasUser(kv.first); });
      std::erase_if(state_.history,
                    [&](const auto& kv) { return !next.HasUser(kv.first); });
    }
    state_.log = std::move(next);
    ++state_.log_version;
    InitUsersLocked();
  }
  report.users = state_.log.users.size();
  report.facts = state_.log.FactCount();
  report.log_version = state_.log_version;
  return report;
}

BuildReport RecommenderService::Rebuild() {
  std::unique_lock lock(state_mutex_);
  if (state_.log.users.empty()) {
    throw ServiceError(503, "no interaction log ingested");
  }
  const std::uint64_t built_at =
      state_.snapshot ? state_.snapshot->built_at() + 1 : 1;
  auto snapshot =
      std::make_shared<const MsnSnapshot>(BuildLayers(state_.log, built_at));
  state_.snapshot = snapshot;
  state_.snapshot_log_version = state_.log_version;

  BuildReport report;
  report.built_at = built_at;
  report.users = state_.log.users.size();
  for (LayerId layer : kAllLayers) {
    report.edge_counts[Index(layer)] = snapshot->EdgeCount(layer);
  }
  spdlog::info("rebuilt snapshot {} with {} edges", built_at,
               snapshot->TotalEdgeCount());
  return report;
}

RecommendationList RecommenderService::Recommend(
    const UserId& k, std::optional<std::size_t> list_length) {
  RecommendParams params = config_.recommend_params();
  if (list_length) {
    if (*list_length < 1) throw ServiceError(400, "list length must be >= 1");
    params.list_length = *list_length;
  }
  std::shared_lock lock(state_mutex_);
  RequireUser(k);
  if (!state_.snapshot) throw ServiceError(503, "no snapshot built");
  std::scoped_lock user_lock(UserMutex(k));
  return msnrec::Recommend(state_.weights, *state_.snapshot, state_.log,
                           state_.history.at(k), k, params);
}

FeedbackResult RecommenderService::Feedback(const UserId& k, const UserId& j,
                                            const Activity& activity) {
  FeedbackResult result;
  result.actor = k;
  result.target = j;
  result.activity = activity;
  result.importance = ActivityImportance(config_.adaptation, activity);

  bool recompute_due = false;
  auto apply = [&] {
    RequireUser(k);
    RequireUser(j);
    if (k == j) throw ServiceError(409, "feedback about oneself");
    if (!state_.snapshot) throw ServiceError(503, "no snapshot built");

    std::scoped_lock user_lock(UserMutex(k));
    LayerVector& personal = state_.weights.Personal(k);
    result.old_weights = personal;
    result.new_weights = personal;
    result.contribution = Contribution(*state_.snapshot, k, j);
    if (!result.contribution) {
      result.skipped = true;
      result.skip_reason = "no relation between users on any layer";
    } else if (auto updated = UpdatePersonalWeights(
                   personal, *result.contribution, result.importance,
                   config_.adaptation.epsilon)) {
      personal = *updated;
      result.new_weights = personal;
      const std::uint64_t n =
          std::atomic_ref(state_.feedback_events).fetch_add(1) + 1;
      recompute_due = n % config_.recompute_period == 0;
    } else {
      spdlog::warn("rejected weight update for {} -> {}: non-positive "
                   "denominator",
                   k, j);
      result.skipped = true;
      result.skip_reason = "update rejected: non-positive denominator";
    }
  };

  if (activity.kind == ActivityKind::kAddedToContacts) {
    std::unique_lock lock(state_mutex_);
    apply();
    if (!state_.log.Contacts(k).contains(j)) {
      state_.log.contacts[k].insert(j);
      ++state_.log_version;
      result.contact_added = true;
    }
  } else {
    std::shared_lock lock(state_mutex_);
    apply();
  }

  if (recompute_due) {
    RecomputeSystem();
    result.system_recomputed = true;
  }
  return result;
}

WeightsView RecommenderService::Weights(const UserId& k) const {
  std::shared_lock lock(state_mutex_);
  RequireUser(k);
  std::scoped_lock user_lock(UserMutex(k));
  return {k, state_.weights.system, state_.weights.Personal(k)};
}

LayerVector RecommenderService::RecomputeSystem() {
  std::unique_lock lock(state_mutex_);
  state_.weights.system = RecomputeSystemWeights(state_.weights);
  return state_.weights.system;
}

std::vector<LayerInfo> RecommenderService::Layers() const {
  std::shared_lock lock(state_mutex_);
  std::vector<LayerInfo> out;
  for (LayerId layer : kAllLayers) {
    out.push_back({layer, KindOf(layer),
                   state_.snapshot ? state_.snapshot->EdgeCount(layer) : 0});
  }
  return out;
}

HealthInfo RecommenderService::Health() const {
  std::unique_lock lock(state_mutex_);
  HealthInfo h;
  h.users = state_.log.users.size();
  h.has_snapshot = state_.snapshot != nullptr;
  h.snapshot_built_at = state_.snapshot ? state_.snapshot->built_at() : 0;
  h.snapshot_stale = state_.SnapshotStale();
  h.log_version = state_.log_version;
  h.feedback_events = state_.feedback_events;
  return h;
}

SystemState RecommenderService::ExportState() const {
  std::unique_lock lock(state_mutex_);
  return state_;
}

void RecommenderService::ImportState(SystemState state) {
  std::unique_lock lock(state_mutex_);
  state_ = std::move(state);
  InitUsersLocked();
}

void RecommenderService::SaveTo(const std::filesystem::path& path) const {
  std::unique_lock lock(state_mutex_);
  SaveState(state_, path);
}

void RecommenderService::LoadFrom(const std::filesystem::path& path) {
  ImportState(LoadState(path));
}

}  // namespace msnrec
