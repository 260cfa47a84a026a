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

#include <string>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "msnrec/http_server.h"
#include "test_support.h"

namespace msnrec {
namespace {

using nlohmann::json;

// A service plus a server on an ephemeral loopback port.
class Fixture {
 public:
  explicit Fixture(ServiceConfig config = {})
      : service_(std::move(config)), server_(service_) {
    port_ = server_.BindToAnyPort("127.0.0.1");
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { server_.ListenAfterBind(); });
    server_.WaitUntilReady();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  ~Fixture() {
    server_.Stop();
    thread_.join();
  }

  httplib::Client& client() { return *client_; }

  httplib::Result Post(const std::string& path, const std::string& body,
                       const std::string& type = "application/json") {
    return client_->Post(path, body, type);
  }

  void LoadTiny() {
    auto r = Post("/ingest", testing::ReadDataFile("tiny_world.log"),
                  "text/plain");
    REQUIRE(r);
    REQUIRE(r->status == 200);
    r = Post("/rebuild", "");
    REQUIRE(r->status == 200);
  }

 private:
  RecommenderService service_;
  HttpServer server_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

json Body(const httplib::Result& r) { return json::parse(r->body); }

TEST_CASE("health and layers on an empty service") {
  Fixture f;
  auto r = f.client().Get("/health");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(Body(r)["status"] == "ok");
  CHECK(Body(r)["has_snapshot"] == false);
  CHECK(r->get_header_value("Access-Control-Allow-Origin") == "*");

  r = f.client().Get("/layers");
  const json layers = Body(r)["layers"];
  REQUIRE(layers.size() == 11);
  CHECK(layers[0]["id"] == "Tag");
  CHECK(layers[0]["kind"] == "ObjectEqualRoles");
  CHECK(layers[10]["id"] == "ContactTransitive");
  CHECK(layers[10]["index"] == 10);

  CHECK(f.Post("/rebuild", "")->status == 503);
}

TEST_CASE("ingest, rebuild and recommend") {
  Fixture f;
  auto r = f.Post("/ingest", testing::ReadDataFile("tiny_world.log"),
                  "text/plain");
  CHECK(r->status == 200);
  CHECK(Body(r)["users"] == 14);
  CHECK(Body(r)["changed"] == true);

  r = f.Post("/rebuild", "");
  CHECK(r->status == 200);
  CHECK(Body(r)["edge_counts"]["ContactDirect"] == 10);
  CHECK(Body(r)["edge_counts"]["Tag"] == 8);

  r = f.client().Get("/users/alice/recommendations");
  REQUIRE(r->status == 200);
  json list = Body(r);
  CHECK(list["user"] == "alice");
  REQUIRE(list["items"].size() == 3);
  const json& top = list["items"][0];
  CHECK(top["candidate"] == "heidi");
  CHECK(top["value"].get<double>() == doctest::Approx(16.0 / 33.0));
  CHECK(top["times_shown"] == 0);
  CHECK(top["contributions"].size() == 11);

  r = f.client().Get("/users/alice/recommendations?n=2");
  CHECK(Body(r)["items"].size() == 2);

  CHECK(f.client().Get("/users/nobody/recommendations")->status == 404);
  CHECK(f.client().Get("/users/alice/recommendations?n=0")->status == 400);
  CHECK(f.client().Get("/users/alice/recommendations?n=x")->status == 400);
}

TEST_CASE("feedback and weights") {
  Fixture f;
  f.LoadTiny();

  auto r = f.Post("/users/alice/feedback",
                  R"({"target": "heidi", "activity": "rated:5"})");
  REQUIRE(r->status == 200);
  json body = Body(r);
  CHECK(body["skipped"] == false);
  CHECK(body["importance"] == 1.0);
  CHECK(body["activity"] == "rated:5");
  CHECK(body["new_weights"].size() == 11);

  r = f.Post("/users/alice/feedback",
             R"({"target": "heidi", "activity": "rated", "rating": 2})");
  CHECK(r->status == 200);
  CHECK(Body(r)["importance"] == 0.25);

  r = f.client().Get("/users/alice/weights");
  REQUIRE(r->status == 200);
  body = Body(r);
  double sum = 0.0;
  for (const auto& [name, value] : body["personal"].items()) {
    sum += value.get<double>();
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(body["personal"] != body["system"]);

  r = f.Post("/users/alice/feedback",
             R"({"target": "trent", "activity": "viewed_profile"})");
  CHECK(r->status == 200);
  CHECK(Body(r)["skipped"] == true);
  CHECK(Body(r)["contribution"].is_null());

  CHECK(f.Post("/users/alice/feedback",
               R"({"target": "alice", "activity": "commented"})")
            ->status == 409);
  CHECK(f.Post("/users/alice/feedback",
               R"({"target": "zed", "activity": "commented"})")
            ->status == 404);
  CHECK(f.Post("/users/alice/feedback",
               R"({"target": "heidi", "activity": "rated:9"})")
            ->status == 400);
  CHECK(f.Post("/users/alice/feedback", "not json")->status == 400);
  CHECK(f.client().Get("/users/zed/weights")->status == 404);

  r = f.Post("/admin/recompute", "");
  CHECK(r->status == 200);
  CHECK(Body(r)["system"].size() == 11);
  CHECK(Body(f.client().Get("/health"))["feedback_events"] == 2);
}

TEST_CASE("malformed logs report their line") {
  Fixture f;
  auto r = f.Post("/ingest", "user a\nuser b\ncontact a a\n", "text/plain");
  CHECK(r->status == 400);
  CHECK(Body(r)["line"] == 3);

  r = f.Post("/ingest?mode=bogus", "user a\n", "text/plain");
  CHECK(r->status == 400);

  r = f.Post("/ingest?mode=replace", "user a\n", "text/plain");
  CHECK(r->status == 200);
  CHECK(Body(r)["users"] == 1);
}

TEST_CASE("cross-origin preflight") {
  ServiceConfig config;
  config.cors_origin = "http://localhost:5173";
  Fixture f(config);
  auto r = f.client().Options("/users/alice/feedback");
  REQUIRE(r);
  CHECK(r->status == 204);
  CHECK(r->get_header_value("Access-Control-Allow-Origin") ==
        "http://localhost:5173");
}

}  // namespace
}  // namespace msnrec
