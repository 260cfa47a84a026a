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

#ifndef MSNREC_API_JSON_H_
#define MSNREC_API_JSON_H_

#include <vector>

#include "json.hpp"
#include "msnrec/engine.h"
#include "msnrec/service.h"

namespace msnrec {

// Response bodies shared by the HTTP API and the CLI. Layer vectors are
// objects keyed by layer name in canonical layer order; field names are
// documented in docs/api.md.
using ApiJson = nlohmann::ordered_json;

ApiJson LayerVectorJson(const LayerVector& v);
ApiJson ToJson(const RecommendationList& list);
ApiJson ToJson(const FeedbackResult& result);
ApiJson ToJson(const WeightsView& view);
ApiJson ToJson(const IngestReport& report);
ApiJson ToJson(const BuildReport& report);
ApiJson ToJson(const HealthInfo& health);
ApiJson ToJson(const std::vector<LayerInfo>& layers);

// Reads {"target": ..., "activity": "rated:4"} or
// {"target": ..., "activity": "rated", "rating": 4}. Throws
// std::invalid_argument.
struct FeedbackRequest {
  UserId target;
  Activity activity;
};
FeedbackRequest ParseFeedbackRequest(const nlohmann::json& body);

}  // namespace msnrec

#endif  // MSNREC_API_JSON_H_
