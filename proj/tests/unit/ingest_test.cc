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

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "msnrec/adaptation.h"
#include "msnrec/engine.h"
#include "msnrec/errors.h"
#include "msnrec/log_io.h"
#include "msnrec/state.h"
#include "test_support.h"

namespace msnrec {
namespace {

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("msnrec_ingest_test_" + name);
}

std::size_t ParseErrorLine(std::string_view text) {
  try {
    ParseLog(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

// A state with a snapshot, ten applied feedback events and view history.
SystemState ScriptedState() {
  SystemState state;
  state.log = ParseLog(testing::ReadDataFile("tiny_world.log"));
  state.log_version = 1;
  state.snapshot = std::make_shared<const MsnSnapshot>(BuildLayers(state.log));
  state.snapshot_log_version = 1;
  for (const UserId& u : state.log.users) {
    InitNewUser(state.weights, u);
    state.history[u];
  }
  std::mt19937_64 rng(3);
  const std::vector<UserId> actors = {"alice", "bob", "carol", "frank"};
  int events = 0;
  while (events < 10) {
    const UserId& k = actors[events % actors.size()];
    const auto list = Recommend(state.weights, *state.snapshot, state.log,
                                state.history[k], k, RecommendParams{});
    for (const ScoredCandidate& c : list.items) {
      const auto contribution = Contribution(*state.snapshot, k, c.candidate);
      const double a =
          std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      auto& w = state.weights.Personal(k);
      w = *UpdatePersonalWeights(w, *contribution, a, 0.01);
      ++state.feedback_events;
      if (++events == 10) break;
    }
  }
  state.weights.system = RecomputeSystemWeights(state.weights);
  return state;
}

TEST_CASE("parse_log basics") {
  CHECK(ParseLog("") == InteractionLog{});

  const InteractionLog log = ParseLog("user A\nuser B\ncontact A B\n");
  CHECK(log.users == std::set<UserId>{"A", "B"});
  CHECK(log.Contacts("A") == IdSet{"B"});

  CHECK(ParseLog("user A\nuser B\ncontact A B\ncontact A B\n") == log);
  CHECK(ParseLog("# header\n\nuser A   # trailing\n\tuser B\ncontact A B") ==
        log);
}

TEST_CASE("parse_log reports the failing line") {
  CHECK(ParseErrorLine("user A\nfollow A B\n") == 2);
  CHECK(ParseErrorLine("user A\nuser B\ncontact A\n") == 3);
  CHECK(ParseErrorLine("user\n") == 1);
  // References must follow the declaration.
  CHECK(ParseErrorLine("contact A B\nuser A\nuser B\n") == 1);
  CHECK(ParseErrorLine("user A\ncontact A A\n") == 2);
  CHECK(ParseErrorLine("user A\nuser B\nblock B B\n") == 3);
  // Unpublished objects are reported where first referenced.
  CHECK(ParseErrorLine("user A\nuser B\nauthored A x\nfavourite B y\n") == 4);
  // Authorship may come after the reference.
  CHECK_NOTHROW(ParseLog("user A\nuser B\nfavourite B x\nauthored A x\n"));
}

TEST_CASE("serialize then parse is the identity on valid logs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const InteractionLog log = testing::RandomLog(rng, 1 + trial % 15);
    REQUIRE(ParseLog(SerializeLog(log)) == log);
  }
  const InteractionLog tiny =
      ParseLog(testing::ReadDataFile("tiny_world.log"));
  CHECK(ParseLog(SerializeLog(tiny)) == tiny);
}

TEST_CASE("record order does not matter once users are declared") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const InteractionLog log = testing::RandomLog(rng, 10);
    std::istringstream in(SerializeLog(log));
    std::vector<std::string> users, records;
    for (std::string line; std::getline(in, line);) {
      (line.starts_with("user ") ? users : records).push_back(line);
    }
    std::shuffle(records.begin(), records.end(), rng);
    std::shuffle(users.begin(), users.end(), rng);
    std::string text;
    for (const auto& l : users) text += l + "\n";
    for (const auto& l : records) text += l + "\n";
    REQUIRE(ParseLog(text) == log);
  }
}

TEST_CASE("fresh state round-trips") {
  const auto path = TempPath("fresh.json");
  SystemState state;
  SaveState(state, path);
  CHECK(LoadState(path) == state);
  std::filesystem::remove(path);
}

TEST_CASE("state after scripted feedback round-trips bit for bit") {
  const SystemState state = ScriptedState();
  REQUIRE(state.feedback_events == 10);
  const auto path = TempPath("scripted.json");
  SaveState(state, path);
  const SystemState loaded = LoadState(path);
  CHECK(loaded == state);
  for (const auto& [user, w] : state.weights.personal) {
    const auto& v = loaded.weights.Personal(user);
    for (std::size_t i = 0; i < kLayerCount; ++i) {
      REQUIRE(std::bit_cast<std::uint64_t>(v[i]) ==
              std::bit_cast<std::uint64_t>(w[i]));
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("state versioning and I/O errors") {
  const std::string text = StateToText(SystemState{});
  std::string wrong = text;
  wrong.replace(wrong.find(kStateVersion), kStateVersion.size(),
                "msnrec-state/0");
  CHECK_THROWS_AS(StateFromText(wrong), VersionError);
  CHECK_THROWS_AS(StateFromText("{}"), VersionError);
  CHECK_THROWS_AS(StateFromText("not json"), ValidationError);
  CHECK_THROWS_AS(LoadState(TempPath("does_not_exist.json")), IoError);
  CHECK_THROWS_AS(SaveState(SystemState{}, "/nonexistent-dir/x/state.json"),
                  IoError);
}

}  // namespace
}  // namespace msnrec
