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

#ifndef MSNREC_WEIGHTS_H_
#define MSNREC_WEIGHTS_H_

#include <map>

#include "msnrec/interaction_log.h"
#include "msnrec/layers.h"

namespace msnrec {

// System weights are shared by all users; personal weights are per user.
// Both lie in [0, 1] componentwise and sum to 1.
struct WeightState {
  LayerVector system = UniformLayerVector();
  std::map<UserId, LayerVector> personal;

  bool HasUser(const UserId& k) const { return personal.contains(k); }

  // Throws LookupError if k has no personal vector.
  const LayerVector& Personal(const UserId& k) const;
  LayerVector& Personal(const UserId& k);

  bool operator==(const WeightState&) const = default;
};

// True if every component is in [0, 1] and the sum is within `tolerance`
// of 1.
bool IsWeightVector(const LayerVector& w, double tolerance = 1e-9);

}  // namespace msnrec

#endif  // MSNREC_WEIGHTS_H_
