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

#include <filesystem>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "msnrec/errors.h"
#include "msnrec/log_io.h"
#include "msnrec/service.h"
#include "test_support.h"

namespace msnrec {
namespace {

constexpr char kTriple[] =
    "user a\nuser b\nuser c\n"
    "tag a sunset\ntag b sunset\n";

std::unique_ptr<RecommenderService> TinyService(ServiceConfig config = {}) {
  auto service = std::make_unique<RecommenderService>(std::move(config));
  service->Ingest(testing::ReadDataFile("tiny_world.log"), IngestMode::kMerge);
  service->Rebuild();
  return service;
}

int StatusOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ServiceError& e) {
    return e.status();
  }
  return 0;
}

std::set<UserId> Candidates(const RecommendationList& list) {
  std::set<UserId> out;
  for (const auto& item : list.items) out.insert(item.candidate);
  return out;
}

TEST_CASE("recommendations through the service") {
  auto owned = TinyService();
  RecommenderService& service = *owned;

  const RecommendationList first = service.Recommend("alice");
  const RecommendationList second = service.Recommend("alice");
  CHECK(first.items.size() == 3);
  CHECK(second.items.size() == 3);
  CHECK(first.items[0].candidate == "heidi");
  for (const UserId& c : Candidates(first)) {
    CHECK_FALSE(Candidates(second).contains(c));
  }

  CHECK(service.Recommend("alice", 1).items.size() == 1);
  CHECK(StatusOf([&] { service.Recommend("alice", 0); }) == 400);
  CHECK(StatusOf([&] { service.Recommend("nobody"); }) == 404);
}

TEST_CASE("isolated users get an empty list") {
  RecommenderService service({});
  service.Ingest("user a\nuser b\n", IngestMode::kMerge);
  service.Rebuild();
  CHECK(service.Recommend("a").items.empty());
}

TEST_CASE("operations before a snapshot exists") {
  RecommenderService service({});
  CHECK(StatusOf([&] { service.Rebuild(); }) == 503);
  service.Ingest(kTriple, IngestMode::kMerge);
  CHECK(StatusOf([&] { service.Recommend("a"); }) == 503);
  CHECK(StatusOf([&] {
          service.Feedback("a", "b", Activity::Rated(5));
        }) == 503);
  CHECK_FALSE(service.Health().has_snapshot);
}

TEST_CASE("positive feedback on a single-layer pair") {
  ServiceConfig config;
  config.adaptation.epsilon = 0.0;
  RecommenderService service(config);
  service.Ingest(kTriple, IngestMode::kMerge);
  service.Rebuild();

  const FeedbackResult result = service.Feedback("a", "b", Activity::Rated(5));
  CHECK_FALSE(result.skipped);
  CHECK(result.importance == 1.0);
  REQUIRE(result.contribution.has_value());
  CHECK((*result.contribution)[Index(LayerId::kTag)] == 1.0);
  const std::size_t tag = Index(LayerId::kTag);
  CHECK(result.new_weights[tag] > result.old_weights[tag]);
  CHECK(IsWeightVector(result.new_weights, 1e-12));

  const WeightsView view = service.Weights("a");
  CHECK(view.personal == result.new_weights);
  CHECK(view.personal != view.system);
  CHECK(IsWeightVector(view.system, 1e-12));
  CHECK(service.Weights("b").personal == UniformLayerVector());
  CHECK(service.Health().feedback_events == 1);
}

TEST_CASE("feedback at the current weight is a fixed point") {
  ServiceConfig config;
  config.adaptation.epsilon = 0.0;
  config.adaptation.importance.viewed_profile = 1.0 / 11.0;
  RecommenderService service(config);
  service.Ingest(kTriple, IngestMode::kMerge);
  service.Rebuild();

  const FeedbackResult result =
      service.Feedback("a", "b", Activity::ViewedProfile());
  for (std::size_t i = 0; i < kLayerCount; ++i) {
    CHECK(result.new_weights[i] ==
          doctest::Approx(1.0 / 11.0).epsilon(1e-14));
  }
}

TEST_CASE("feedback errors and skips") {
  RecommenderService service({});
  service.Ingest(kTriple, IngestMode::kMerge);
  service.Rebuild();

  const FeedbackResult skipped =
      service.Feedback("a", "c", Activity::Rated(5));
  CHECK(skipped.skipped);
  CHECK_FALSE(skipped.contribution.has_value());
  CHECK(skipped.new_weights == skipped.old_weights);
  CHECK(service.Health().feedback_events == 0);

  CHECK(StatusOf([&] {
          service.Feedback("a", "a", Activity::Rated(5));
        }) == 409);
  CHECK(StatusOf([&] {
          service.Feedback("a", "zed", Activity::Rated(5));
        }) == 404);
  CHECK(StatusOf([&] {
          service.Feedback("zed", "a", Activity::Rated(5));
        }) == 404);
}

TEST_CASE("ingest and rebuild agree with the layer oracle") {
  RecommenderService service({});
  const IngestReport report = service.Ingest(
      testing::ReadDataFile("tiny_world.log"), IngestMode::kMerge);
  CHECK(report.users == 14);
  CHECK(report.new_users == 14);
  CHECK(report.changed);

  const BuildReport build = service.Rebuild();
  CHECK(build.users == 14);

  const InteractionLog log = ParseLog(testing::ReadDataFile("tiny_world.log"));
  for (LayerId layer : kAllLayers) {
    std::size_t expected = 0;
    for (const UserId& k : log.users) {
      for (const UserId& j : log.users) {
        if (k != j && ComputeLayerStrength(log, layer, k, j) > 0.0) {
          ++expected;
        }
      }
    }
    CHECK(build.edge_counts[Index(layer)] == expected);
  }
  const auto layers = service.Layers();
  REQUIRE(layers.size() == kLayerCount);
  CHECK(layers[Index(LayerId::kContactDirect)].edge_count == 10);

  const IngestReport again = service.Ingest(
      testing::ReadDataFile("tiny_world.log"), IngestMode::kMerge);
  CHECK_FALSE(again.changed);
  CHECK(again.new_users == 0);
  CHECK(again.log_version == report.log_version);
  CHECK_FALSE(service.Health().snapshot_stale);
}

TEST_CASE("replace ingest drops users") {
  auto owned = TinyService();
  RecommenderService& service = *owned;
  const IngestReport report = service.Ingest(kTriple, IngestMode::kReplace);
  CHECK(report.users == 3);
  CHECK(StatusOf([&] { service.Weights("alice"); }) == 404);
  CHECK(service.Health().snapshot_stale);
}

TEST_CASE("malformed logs leave the state unchanged") {
  auto owned = TinyService();
  RecommenderService& service = *owned;
  const HealthInfo before = service.Health();
  CHECK_THROWS_AS(service.Ingest("user x\nfrobnicate x y\n", IngestMode::kMerge),
                  ParseError);
  const HealthInfo after = service.Health();
  CHECK(after.users == before.users);
  CHECK(after.log_version == before.log_version);
}

TEST_CASE("adding a contact changes the log") {
  auto owned = TinyService();
  RecommenderService& service = *owned;
  const FeedbackResult result =
      service.Feedback("alice", "heidi", Activity::AddedToContacts());
  CHECK(result.contact_added);
  CHECK_FALSE(result.skipped);
  CHECK(service.Health().snapshot_stale);
  CHECK(service.ExportState().log.Contacts("alice").contains("heidi"));

  service.Rebuild();
  for (int i = 0; i < 4; ++i) {
    CHECK_FALSE(Candidates(service.Recommend("alice")).contains("heidi"));
  }
  const FeedbackResult repeat =
      service.Feedback("alice", "heidi", Activity::AddedToContacts());
  CHECK_FALSE(repeat.contact_added);
}

TEST_CASE("system weights follow personal weights") {
  ServiceConfig config;
  config.recompute_period = 2;
  RecommenderService service(config);
  service.Ingest(kTriple, IngestMode::kMerge);
  service.Rebuild();

  CHECK_FALSE(service.Feedback("a", "b", Activity::Rated(5)).system_recomputed);
  const FeedbackResult second = service.Feedback("a", "b", Activity::Rated(5));
  CHECK(second.system_recomputed);

  const WeightsView a = service.Weights("a");
  const WeightsView b = service.Weights("b");
  for (std::size_t i = 0; i < kLayerCount; ++i) {
    CHECK(a.system[i] ==
          doctest::Approx((a.personal[i] + 2.0 / 11.0) / 3.0).epsilon(1e-14));
  }
  CHECK(b.personal == UniformLayerVector());

  service.Ingest("user d\n", IngestMode::kMerge);
  CHECK(service.Weights("d").personal == a.system);
  CHECK(service.RecomputeSystem() == a.system);
}

TEST_CASE("save and load through the service") {
  const auto path =
      std::filesystem::temp_directory_path() / "msnrec_service_test.json";
  auto owned = TinyService();
  RecommenderService& service = *owned;
  service.Recommend("alice");
  service.Feedback("alice", "heidi", Activity::Rated(4));
  service.SaveTo(path);

  RecommenderService restored({});
  restored.LoadFrom(path);
  CHECK(restored.ExportState() == service.ExportState());
  CHECK(restored.Recommend("alice").items[0].candidate ==
        service.Recommend("alice").items[0].candidate);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(restored.LoadFrom(path), IoError);
}

TEST_CASE("config parsing") {
  const ServiceConfig config = ParseConfig(R"({
    "port": 9000, "list_length": 5, "epsilon": 0.02,
    "importance": {"commented": 0.4}, "cors_origin": "http://x"
  })");
  CHECK(config.port == 9000);
  CHECK(config.list_length == 5);
  CHECK(config.adaptation.epsilon == 0.02);
  CHECK(config.adaptation.importance.commented == 0.4);
  CHECK(config.adaptation.importance.viewed_profile == 0.3);
  CHECK(config.cors_origin == "http://x");
  CHECK(config.damping == 0.5);

  CHECK_THROWS_AS(ParseConfig(R"({"list_length": 0})"), std::invalid_argument);
  CHECK_THROWS_AS(ParseConfig(R"({"damping": 1.5})"), std::invalid_argument);
  CHECK_THROWS_AS(ParseConfig(R"({"epsilon": -1})"), std::invalid_argument);
  CHECK_THROWS_AS(ParseConfig("{not json"), std::invalid_argument);
}

}  // namespace
}  // namespace msnrec
