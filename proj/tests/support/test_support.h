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

#ifndef MSNREC_TESTS_SUPPORT_TEST_SUPPORT_H_
#define MSNREC_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "msnrec/interaction_log.h"
#include "msnrec/layers.h"
#include "msnrec/weights.h"

namespace msnrec::testing {

// Absolute path of a file under tests/data.
std::string DataPath(const std::string& name);
std::string ReadDataFile(const std::string& name);

// A random valid log with `n_users` users (u0, u1, ...). Every relation is
// populated with moderate density so that all eleven layers get edges.
InteractionLog RandomLog(std::mt19937_64& rng, std::size_t n_users);

// A uniformly random point of the probability simplex.
LayerVector RandomSimplex(std::mt19937_64& rng);

// Random personal weights for every user of `log` and random system
// weights.
WeightState RandomWeights(std::mt19937_64& rng, const InteractionLog& log);

// Brute-force recommendation values: every ordered pair and every layer is
// evaluated straight from the log with ComputeLayerStrength and the
// textbook formula, without the snapshot or the engine.
struct OracleScore {
  UserId candidate;
  double value;
};
std::vector<OracleScore> OracleRanking(const InteractionLog& log,
                                       const WeightState& weights,
                                       const UserId& k);

}  // namespace msnrec::testing

#endif  // MSNREC_TESTS_SUPPORT_TEST_SUPPORT_H_
