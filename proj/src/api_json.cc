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

#include "msnrec/api_json.h"

#include <stdexcept>
#include <string>

namespace msnrec {

ApiJson LayerVectorJson(const LayerVector& v) {
  ApiJson out = ApiJson::object();
  for (LayerId layer : kAllLayers) {
    out[std::string(LayerName(layer))] = v[Index(layer)];
  }
  return out;
}

ApiJson ToJson(const RecommendationList& list) {
  ApiJson items = ApiJson::array();
  for (const ScoredCandidate& c : list.items) {
    items.push_back({
        {"candidate", c.candidate},
        {"value", c.value},
        {"raw_value", c.raw_value},
        {"damped", c.damped},
        {"times_shown", c.times_shown},
        {"contributions", LayerVectorJson(c.contributions)},
    });
  }
  return {{"user", list.for_user},
          {"request_seq", list.request_seq},
          {"items", std::move(items)}};
}

ApiJson ToJson(const FeedbackResult& result) {
  ApiJson out = {
      {"actor", result.actor},
      {"target", result.target},
      {"activity", result.activity.ToString()},
      {"importance", result.importance},
      {"skipped", result.skipped},
  };
  if (result.skipped) out["reason"] = result.skip_reason;
  out["contribution"] = result.contribution
                            ? LayerVectorJson(*result.contribution)
                            : ApiJson(nullptr);
  out["old_weights"] = LayerVectorJson(result.old_weights);
  out["new_weights"] = LayerVectorJson(result.new_weights);
  out["contact_added"] = result.contact_added;
  out["system_recomputed"] = result.system_recomputed;
  return out;
}

ApiJson ToJson(const WeightsView& view) {
  return {{"user", view.user},
          {"system", LayerVectorJson(view.system)},
          {"personal", LayerVectorJson(view.personal)}};
}

ApiJson ToJson(const IngestReport& report) {
  return {{"users", report.users},
          {"facts", report.facts},
          {"new_users", report.new_users},
          {"changed", report.changed},
          {"log_version", report.log_version}};
}

ApiJson ToJson(const BuildReport& report) {
  ApiJson counts = ApiJson::object();
  for (LayerId layer : kAllLayers) {
    counts[std::string(LayerName(layer))] = report.edge_counts[Index(layer)];
  }
  return {{"built_at", report.built_at},
          {"users", report.users},
          {"edge_counts", std::move(counts)}};
}

ApiJson ToJson(const HealthInfo& health) {
  return {{"status", "ok"},
          {"users", health.users},
          {"has_snapshot", health.has_snapshot},
          {"snapshot_built_at", health.snapshot_built_at},
          {"snapshot_stale", health.snapshot_stale},
          {"log_version", health.log_version},
          {"feedback_events", health.feedback_events}};
}

ApiJson ToJson(const std::vector<LayerInfo>& layers) {
  ApiJson out = ApiJson::array();
  for (const LayerInfo& info : layers) {
    out.push_back({{"id", LayerName(info.id)},
                   {"index", Index(info.id)},
                   {"kind", LayerKindName(info.kind)},
                   {"edge_count", info.edge_count}});
  }
  return {{"layers", std::move(out)}};
}

FeedbackRequest ParseFeedbackRequest(const nlohmann::json& body) {
  if (!body.is_object()) {
    throw std::invalid_argument("feedback body must be a JSON object");
  }
  if (!body.contains("target") || !body["target"].is_string()) {
    throw std::invalid_argument("feedback body needs a string 'target'");
  }
  if (!body.contains("activity") || !body["activity"].is_string()) {
    throw std::invalid_argument("feedback body needs a string 'activity'");
  }
  FeedbackRequest request;
  request.target = body["target"].get<std::string>();
  const std::string activity = body["activity"].get<std::string>();
  if (activity == "rated") {
    if (!body.contains("rating") || !body["rating"].is_number_integer()) {
      throw std::invalid_argument("'rated' needs an integer 'rating'");
    }
    request.activity = Activity::Rated(body["rating"].get<int>());
  } else {
    request.activity = Activity::Parse(activity);
  }
  return request;
}

}  // namespace msnrec
