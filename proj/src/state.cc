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

#include "msnrec/state.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "msnrec/errors.h"

namespace msnrec {
namespace {

using nlohmann::json;

json RelationToJson(const Relation& relation) {
  json out = json::object();
  for (const auto& [user, items] : relation) out[user] = items;
  return out;
}

Relation RelationFromJson(const json& j) {
  Relation relation;
  for (const auto& [user, items] : j.items()) {
    IdSet set = items.get<IdSet>();
    if (!set.empty()) relation.emplace(user, std::move(set));
  }
  return relation;
}

json LogToJson(const InteractionLog& log) {
  return {
      {"users", log.users},
      {"authored", RelationToJson(log.authored)},
      {"tags_used", RelationToJson(log.tags_used)},
      {"groups", RelationToJson(log.groups)},
      {"favourites", RelationToJson(log.favourites)},
      {"opinions", RelationToJson(log.opinions)},
      {"contacts", RelationToJson(log.contacts)},
      {"blocked", RelationToJson(log.blocked)},
  };
}

InteractionLog LogFromJson(const json& j) {
  InteractionLog log;
  log.users = j.at("users").get<std::set<UserId>>();
  log.authored = RelationFromJson(j.at("authored"));
  log.tags_used = RelationFromJson(j.at("tags_used"));
  log.groups = RelationFromJson(j.at("groups"));
  log.favourites = RelationFromJson(j.at("favourites"));
  log.opinions = RelationFromJson(j.at("opinions"));
  log.contacts = RelationFromJson(j.at("contacts"));
  log.blocked = RelationFromJson(j.at("blocked"));
  return log;
}

json VectorToJson(const LayerVector& v) { return json(v); }

LayerVector VectorFromJson(const json& j) {
  if (!j.is_array() || j.size() != kLayerCount) {
    throw ValidationError("layer vector must have 11 entries");
  }
  return j.get<LayerVector>();
}

json SnapshotToJson(const MsnSnapshot& snapshot) {
  json layers = json::object();
  for (LayerId layer : kAllLayers) {
    json edges = json::object();
    for (const auto& [k, row] : snapshot.Edges(layer)) {
      json out = json::object();
      for (const auto& [j, s] : row) out[j] = s;
      edges[k] = std::move(out);
    }
    layers[std::string(LayerName(layer))] = std::move(edges);
  }
  return {{"built_at", snapshot.built_at()}, {"layers", std::move(layers)}};
}

MsnSnapshot SnapshotFromJson(const json& j) {
  MsnSnapshot snapshot(j.at("built_at").get<std::uint64_t>());
  for (const auto& [name, edges] : j.at("layers").items()) {
    auto layer = ParseLayerName(name);
    if (!layer) throw ValidationError("unknown layer '" + name + "'");
    for (const auto& [k, row] : edges.items()) {
      for (const auto& [target, s] : row.items()) {
        snapshot.Set(*layer, k, target, s.get<double>());
      }
    }
  }
  return snapshot;
}

json HistoryToJson(const ViewHistory& h) {
  return {{"request_seq", h.request_seq},
          {"shown", h.shown},
          {"cycle_exposures", h.cycle_exposures}};
}

ViewHistory HistoryFromJson(const json& j) {
  ViewHistory h;
  h.request_seq = j.at("request_seq").get<std::uint64_t>();
  h.shown = j.at("shown").get<std::map<UserId, std::uint32_t>>();
  h.cycle_exposures = j.at("cycle_exposures").get<std::vector<UserId>>();
  return h;
}

}  // namespace

bool SystemState::operator==(const SystemState& other) const {
  const bool same_snapshot =
      (snapshot == nullptr && other.snapshot == nullptr) ||
      (snapshot != nullptr && other.snapshot != nullptr &&
       *snapshot == *other.snapshot);
  return same_snapshot && log == other.log &&
         log_version == other.log_version &&
         snapshot_log_version == other.snapshot_log_version &&
         weights == other.weights && history == other.history &&
         feedback_events == other.feedback_events;
}

std::string StateToText(const SystemState& state) {
  json personal = json::object();
  for (const auto& [user, w] : state.weights.personal) {
    personal[user] = VectorToJson(w);
  }
  json history = json::object();
  for (const auto& [user, h] : state.history) {
    history[user] = HistoryToJson(h);
  }
  json doc = {
      {"version", kStateVersion},
      {"log", LogToJson(state.log)},
      {"log_version", state.log_version},
      {"snapshot", state.snapshot ? SnapshotToJson(*state.snapshot)
                                  : json(nullptr)},
      {"snapshot_log_version", state.snapshot_log_version},
      {"system_weights", VectorToJson(state.weights.system)},
      {"personal_weights", std::move(personal)},
      {"history", std::move(history)},
      {"feedback_events", state.feedback_events},
  };
  return doc.dump(1) + "\n";
}

SystemState StateFromText(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("state file is not valid JSON: ") +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("version") ||
      !doc["version"].is_string()) {
    throw VersionError("state file has no version tag");
  }
  if (doc["version"].get<std::string>() != kStateVersion) {
    throw VersionError("unsupported state version '" +
                       doc["version"].get<std::string>() + "', expected '" +
                       std::string(kStateVersion) + "'");
  }
  try {
    SystemState state;
    state.log = LogFromJson(doc.at("log"));
    state.log.Validate();
    state.log_version = doc.at("log_version").get<std::uint64_t>();
    if (!doc.at("snapshot").is_null()) {
      state.snapshot =
          std::make_shared<const MsnSnapshot>(SnapshotFromJson(doc["snapshot"]));
    }
    state.snapshot_log_version =
        doc.at("snapshot_log_version").get<std::uint64_t>();
    state.weights.system = VectorFromJson(doc.at("system_weights"));
    for (const auto& [user, w] : doc.at("personal_weights").items()) {
      state.weights.personal.emplace(user, VectorFromJson(w));
    }
    for (const auto& [user, h] : doc.at("history").items()) {
      state.history.emplace(user, HistoryFromJson(h));
    }
    state.feedback_events = doc.at("feedback_events").get<std::uint64_t>();
    return state;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed state file: ") + e.what());
  }
}

void SaveState(const SystemState& state, const std::filesystem::path& path) {
  const std::string text = StateToText(state);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot move state into '" + path.string() +
                  "': " + ec.message());
  }
}

SystemState LoadState(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return StateFromText(buffer.str());
}

}  // namespace msnrec
