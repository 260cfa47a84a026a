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

#ifndef MSNREC_HTTP_SERVER_H_
#define MSNREC_HTTP_SERVER_H_

#include <memory>
#include <string>

#include "msnrec/service.h"

namespace msnrec {

// JSON-over-HTTP front end for a RecommenderService:
//
//   POST /ingest[?mode=merge|replace]   body: log text
//   POST /rebuild
//   GET  /users/{k}/recommendations[?n=L]
//   POST /users/{k}/feedback            body: {"target", "activity"[, "rating"]}
//   GET  /users/{k}/weights
//   GET  /layers
//   POST /admin/recompute
//   GET  /health
class HttpServer {
 public:
  explicit HttpServer(RecommenderService& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Blocks until Stop(). Returns false if the address cannot be bound.
  bool Listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int BindToAnyPort(const std::string& host);
  // Serves on a socket bound by BindToAnyPort; blocks until Stop().
  bool ListenAfterBind();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace msnrec

#endif  // MSNREC_HTTP_SERVER_H_
