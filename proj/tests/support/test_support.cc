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

#include "test_support.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "msnrec/snapshot.h"

namespace msnrec::testing {

std::string DataPath(const std::string& name) {
  return std::string(MSNREC_TEST_DATA_DIR) + "/" + name;
}

std::string ReadDataFile(const std::string& name) {
  std::ifstream in(DataPath(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

InteractionLog RandomLog(std::mt19937_64& rng, std::size_t n_users) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  InteractionLog log;
  std::vector<UserId> users;
  for (std::size_t u = 0; u < n_users; ++u) {
    users.push_back("u" + std::to_string(u));
    log.users.insert(users.back());
  }
  std::vector<ObjectId> objects;
  for (const UserId& u : users) {
    const int n = static_cast<int>(coin(rng) * 4);
    for (int i = 0; i < n; ++i) {
      objects.push_back(u + "_o" + std::to_string(i));
      log.authored[u].insert(objects.back());
    }
  }
  auto sprinkle = [&](Relation& relation, const std::string& prefix,
                      std::size_t vocabulary, double p) {
    for (const UserId& u : users) {
      for (std::size_t t = 0; t < vocabulary; ++t) {
        if (coin(rng) < p) relation[u].insert(prefix + std::to_string(t));
      }
    }
  };
  sprinkle(log.tags_used, "t", 8, 0.25);
  sprinkle(log.groups, "g", 4, 0.2);
  for (const UserId& u : users) {
    for (const ObjectId& o : objects) {
      if (coin(rng) < 0.12) log.favourites[u].insert(o);
      if (coin(rng) < 0.12) log.opinions[u].insert(o);
    }
    for (const UserId& v : users) {
      if (v == u) continue;
      const double r = coin(rng);
      if (r < 0.15) {
        log.contacts[u].insert(v);
      } else if (r < 0.18) {
        log.blocked[u].insert(v);
      }
    }
  }
  log.Validate();
  return log;
}

LayerVector RandomSimplex(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  LayerVector v;
  double total = 0.0;
  for (double& x : v) {
    x = e(rng);
    total += x;
  }
  for (double& x : v) x /= total;
  return v;
}

WeightState RandomWeights(std::mt19937_64& rng, const InteractionLog& log) {
  WeightState w;
  w.system = RandomSimplex(rng);
  for (const UserId& u : log.users) w.personal[u] = RandomSimplex(rng);
  return w;
}

std::vector<OracleScore> OracleRanking(const InteractionLog& log,
                                       const WeightState& weights,
                                       const UserId& k) {
  std::vector<OracleScore> out;
  for (const UserId& j : log.users) {
    if (j == k) continue;
    double s[kLayerCount];
    double max_s = 0.0;
    for (std::size_t i = 0; i < kLayerCount; ++i) {
      s[i] = ComputeLayerStrength(log, static_cast<LayerId>(i), k, j);
      if (s[i] > max_s) max_s = s[i];
    }
    if (max_s == 0.0) continue;
    double v = 0.0;
    for (std::size_t i = 0; i < kLayerCount; ++i) {
      v += (weights.system[i] + weights.personal.at(k)[i]) * s[i] / max_s;
    }
    out.push_back({j, v});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.value != b.value ? a.value > b.value : a.candidate < b.candidate;
  });
  return out;
}

}  // namespace msnrec::testing
