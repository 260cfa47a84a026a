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

#include "msnrec/weights.h"

#include <cmath>

#include "msnrec/errors.h"

namespace msnrec {

const LayerVector& WeightState::Personal(const UserId& k) const {
  auto it = personal.find(k);
  if (it == personal.end()) {
    throw LookupError("no personal weights for '" + k + "'");
  }
  return it->second;
}

LayerVector& WeightState::Personal(const UserId& k) {
  auto it = personal.find(k);
  if (it == personal.end()) {
    throw LookupError("no personal weights for '" + k + "'");
  }
  return it->second;
}

bool IsWeightVector(const LayerVector& w, double tolerance) {
  for (double x : w) {
    if (!(x >= 0.0 && x <= 1.0)) return false;
  }
  return std::abs(Sum(w) - 1.0) <= tolerance;
}

}  // namespace msnrec
