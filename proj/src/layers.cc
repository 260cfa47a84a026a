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

#include "msnrec/layers.h"

#include <numeric>

namespace msnrec {
namespace {

constexpr std::array<std::string_view, kLayerCount> kNames = {
    "Tag",           "Group",         "FavFav",
    "FavAuthor",     "AuthorFav",     "OpOp",
    "OpAuthor",      "AuthorOp",      "ContactCommon",
    "ContactDirect", "ContactTransitive",
};

}  // namespace

std::string_view LayerName(LayerId layer) { return kNames[Index(layer)]; }

std::optional<LayerId> ParseLayerName(std::string_view name) {
  for (LayerId layer : kAllLayers) {
    if (kNames[Index(layer)] == name) return layer;
  }
  return std::nullopt;
}

LayerKind KindOf(LayerId layer) {
  switch (layer) {
    case LayerId::kTag:
    case LayerId::kGroup:
    case LayerId::kFavFav:
    case LayerId::kOpOp:
      return LayerKind::kObjectEqualRoles;
    case LayerId::kFavAuthor:
    case LayerId::kAuthorFav:
    case LayerId::kOpAuthor:
    case LayerId::kAuthorOp:
      return LayerKind::kObjectDifferentRoles;
    case LayerId::kContactCommon:
    case LayerId::kContactDirect:
    case LayerId::kContactTransitive:
      return LayerKind::kDirectIntentional;
  }
  return LayerKind::kDirectIntentional;
}

std::string_view LayerKindName(LayerKind kind) {
  switch (kind) {
    case LayerKind::kDirectIntentional:
      return "DirectIntentional";
    case LayerKind::kObjectEqualRoles:
      return "ObjectEqualRoles";
    case LayerKind::kObjectDifferentRoles:
      return "ObjectDifferentRoles";
  }
  return "";
}

LayerVector UniformLayerVector() {
  LayerVector v;
  v.fill(1.0 / static_cast<double>(kLayerCount));
  return v;
}

double Sum(const LayerVector& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace msnrec
