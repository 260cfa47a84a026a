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

#include "msnrec/http_server.h"

#include <exception>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "msnrec/api_json.h"
#include "msnrec/errors.h"

namespace msnrec {
namespace {

constexpr char kJson[] = "application/json";

void Reply(httplib::Response& res, int status, const ApiJson& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void ReplyError(httplib::Response& res, int status, const std::string& what) {
  Reply(res, status, {{"error", what}});
}

// Runs `handler`, translating exceptions into JSON error responses.
template <typename Handler>
httplib::Server::Handler Guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const ServiceError& e) {
      ReplyError(res, e.status(), e.what());
    } catch (const ParseError& e) {
      Reply(res, 400, {{"error", e.what()}, {"line", e.line()}});
    } catch (const ValidationError& e) {
      ReplyError(res, 400, e.what());
    } catch (const LookupError& e) {
      ReplyError(res, 404, e.what());
    } catch (const std::invalid_argument& e) {
      ReplyError(res, 400, e.what());
    } catch (const nlohmann::json::exception& e) {
      ReplyError(res, 400, e.what());
    } catch (const std::exception& e) {
      spdlog::error("{} {}: {}", req.method, req.path, e.what());
      ReplyError(res, 500, e.what());
    }
  };
}

}  // namespace

struct HttpServer::Impl {
  explicit Impl(RecommenderService& s) : service(s) {}
  RecommenderService& service;
  httplib::Server server;
};

HttpServer::HttpServer(RecommenderService& service)
    : impl_(std::make_unique<Impl>(service)) {
  auto& server = impl_->server;
  RecommenderService& svc = service;
  const std::string origin = service.config().cors_origin;

  server.set_post_routing_handler(
      [origin](const httplib::Request&, httplib::Response& res) {
        if (!origin.empty()) {
          res.set_header("Access-Control-Allow-Origin", origin);
          res.set_header("Access-Control-Allow-Headers", "Content-Type");
          res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        }
      });
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server.Post("/ingest", Guarded([&svc](const httplib::Request& req,
                                        httplib::Response& res) {
                IngestMode mode = IngestMode::kMerge;
                if (req.has_param("mode")) {
                  const std::string m = req.get_param_value("mode");
                  if (m == "replace") {
                    mode = IngestMode::kReplace;
                  } else if (m != "merge") {
                    throw std::invalid_argument("mode must be merge|replace");
                  }
                }
                Reply(res, 200, ToJson(svc.Ingest(req.body, mode)));
              }));

  server.Post("/rebuild",
              Guarded([&svc](const httplib::Request&, httplib::Response& res) {
                Reply(res, 200, ToJson(svc.Rebuild()));
              }));

  server.Get(R"(/users/([^/]+)/recommendations)",
             Guarded([&svc](const httplib::Request& req,
                            httplib::Response& res) {
               std::optional<std::size_t> n;
               if (req.has_param("n")) {
                 n = std::stoul(req.get_param_value("n"));
               }
               Reply(res, 200, ToJson(svc.Recommend(req.matches[1], n)));
             }));

  server.Post(R"(/users/([^/]+)/feedback)",
              Guarded([&svc](const httplib::Request& req,
                             httplib::Response& res) {
                const auto request =
                    ParseFeedbackRequest(nlohmann::json::parse(req.body));
                Reply(res, 200,
                      ToJson(svc.Feedback(req.matches[1], request.target,
                                          request.activity)));
              }));

  server.Get(R"(/users/([^/]+)/weights)",
             Guarded([&svc](const httplib::Request& req,
                            httplib::Response& res) {
               Reply(res, 200, ToJson(svc.Weights(req.matches[1])));
             }));

  server.Get("/layers",
             Guarded([&svc](const httplib::Request&, httplib::Response& res) {
               Reply(res, 200, ToJson(svc.Layers()));
             }));

  server.Post("/admin/recompute",
              Guarded([&svc](const httplib::Request&, httplib::Response& res) {
                Reply(res, 200,
                      {{"system", LayerVectorJson(svc.RecomputeSystem())}});
              }));

  server.Get("/health",
             Guarded([&svc](const httplib::Request&, httplib::Response& res) {
               Reply(res, 200, ToJson(svc.Health()));
             }));
}

HttpServer::~HttpServer() = default;

bool HttpServer::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int HttpServer::BindToAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace msnrec
