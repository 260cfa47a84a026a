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

#ifndef MSNREC_LAYERS_H_
#define MSNREC_LAYERS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace msnrec {

// The relation layers of the multirelational social network. The order is
// canonical: it fixes vector indices, serialization order and UI ordering.
enum class LayerId : std::size_t {
  kTag = 0,
  kGroup,
  kFavFav,
  kFavAuthor,
  kAuthorFav,
  kOpOp,
  kOpAuthor,
  kAuthorOp,
  kContactCommon,
  kContactDirect,
  kContactTransitive,
};

inline constexpr std::size_t kLayerCount = 11;

enum class LayerKind {
  kDirectIntentional,
  kObjectEqualRoles,
  kObjectDifferentRoles,
};

// One real per layer, indexed by LayerId. Used for strengths, weights and
// contributions alike.
using LayerVector = std::array<double, kLayerCount>;

inline constexpr std::array<LayerId, kLayerCount> kAllLayers = {
    LayerId::kTag,           LayerId::kGroup,         LayerId::kFavFav,
    LayerId::kFavAuthor,     LayerId::kAuthorFav,     LayerId::kOpOp,
    LayerId::kOpAuthor,      LayerId::kAuthorOp,      LayerId::kContactCommon,
    LayerId::kContactDirect, LayerId::kContactTransitive,
};

constexpr std::size_t Index(LayerId layer) {
  return static_cast<std::size_t>(layer);
}

std::string_view LayerName(LayerId layer);
std::optional<LayerId> ParseLayerName(std::string_view name);
LayerKind KindOf(LayerId layer);
std::string_view LayerKindName(LayerKind kind);

// Every component equal to 1/11.
LayerVector UniformLayerVector();

double Sum(const LayerVector& v);

}  // namespace msnrec

#endif  // MSNREC_LAYERS_H_
