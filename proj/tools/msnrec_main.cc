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

// Command-line front end. Every command except `serve` and `simulate` works
// on a state file (--state), loading it if present and writing it back
// after mutating commands.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "msnrec/api_json.h"
#include "msnrec/errors.h"
#include "msnrec/http_server.h"
#include "msnrec/service.h"
#include "msnrec/sim.h"

namespace {

using msnrec::RecommenderService;

msnrec::HttpServer* g_server = nullptr;

void HandleSignal(int) {
  if (g_server != nullptr) g_server->Stop();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw msnrec::IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void Print(const msnrec::ApiJson& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive people recommendation over a multirelational "
               "social network"};
  app.require_subcommand(1);

  std::string state_path = "msnrec_state.json";
  std::string config_path;
  app.add_option("--state", state_path, "State file used by offline commands");
  app.add_option("--config", config_path, "JSON service configuration");

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--config", config_path, "JSON service configuration")
      ->required();

  std::string log_file;
  bool replace = false;
  auto* ingest = app.add_subcommand("ingest", "Add an interaction log");
  ingest->add_option("logfile", log_file)->required();
  ingest->add_flag("--replace", replace, "Replace instead of merge");

  auto* rebuild = app.add_subcommand("rebuild", "Rebuild all layers");

  std::string user, target, activity;
  std::size_t list_length = 0;
  auto* recommend = app.add_subcommand("recommend", "Serve recommendations");
  recommend->add_option("uid", user)->required();
  recommend->add_option("-n", list_length, "List length");

  auto* feedback = app.add_subcommand(
      "feedback",
      "Report an activity: viewed_profile|commented|added_to_contacts|rated:R");
  feedback->add_option("uid", user)->required();
  feedback->add_option("target", target)->required();
  feedback->add_option("activity", activity)->required();

  auto* weights = app.add_subcommand("weights", "Show layer weights");
  weights->add_option("uid", user)->required();

  auto* layers = app.add_subcommand("layers", "Show layers and edge counts");
  auto* recompute =
      app.add_subcommand("recompute", "Recompute system weights now");
  auto* health = app.add_subcommand("health", "Show state counters");

  std::string path;
  auto* save = app.add_subcommand("save", "Copy the state to a file");
  save->add_option("path", path)->required();
  auto* load = app.add_subcommand("load", "Replace the state from a file");
  load->add_option("path", path)->required();

  msnrec::sim::WorldSpec spec;
  msnrec::sim::ExperimentOptions options;
  std::size_t n_seeds = 1;
  std::string report_path;
  bool freeze = false;
  auto* simulate =
      app.add_subcommand("simulate", "Run the recommend/rate/adapt experiment");
  simulate->add_option("--seed", spec.seed, "First seed");
  simulate->add_option("--seeds", n_seeds, "Number of consecutive seeds");
  simulate->add_option("--users", spec.n_users, "Users in the world");
  simulate->add_option("--raters", spec.n_raters, "Rating users");
  simulate->add_option("--rounds", options.rounds, "Rounds (>= 2)");
  simulate->add_option("--list-len", options.list_length, "List length");
  simulate->add_option("--epsilon", options.adaptation.epsilon, "Epsilon");
  simulate->add_option("--noise", spec.noise_sd, "Rating noise sd");
  simulate->add_option("--acts", spec.acts_per_user, "Relational acts per user");
  simulate->add_option("--homophily", spec.homophily,
                       "Probability an act stays in the actor's community");
  simulate->add_option("--peak-mass", spec.peak_mass,
                       "Latent mass on the dominant layer");
  simulate->add_option("--objects", spec.objects_per_user,
                       "Objects authored per user");
  simulate->add_option("--out", report_path, "CSV report path");
  simulate->add_flag("--freeze-weights", freeze, "Ablation: no adaptation");

  CLI11_PARSE(app, argc, argv);
  spdlog::set_default_logger(spdlog::stderr_color_mt("msnrec"));

  try {
    if (simulate->parsed()) {
      options.freeze_weights = freeze;
      const auto reports = msnrec::sim::RunSeeds(spec, options, n_seeds);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw msnrec::IoError("cannot write '" + report_path + "'");
        msnrec::sim::WriteReportCsv(reports, out);
      }
      std::cout << msnrec::sim::Summarize(reports);
      return 0;
    }

    msnrec::ServiceConfig config;
    if (!config_path.empty()) config = msnrec::LoadConfig(config_path);

    if (serve->parsed()) {
      RecommenderService service(config);
      if (!config.state_path.empty() &&
          std::filesystem::exists(config.state_path)) {
        service.LoadFrom(config.state_path);
        spdlog::info("loaded state from {}", config.state_path);
      }
      msnrec::HttpServer server(service);
      g_server = &server;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      spdlog::info("listening on {}:{}", config.host, config.port);
      if (!server.Listen(config.host, config.port)) {
        spdlog::error("cannot listen on {}:{}", config.host, config.port);
        return 1;
      }
      g_server = nullptr;
      if (!config.state_path.empty()) {
        service.SaveTo(config.state_path);
        spdlog::info("saved state to {}", config.state_path);
      }
      return 0;
    }

    RecommenderService service(config);
    if (std::filesystem::exists(state_path)) service.LoadFrom(state_path);
    bool dirty = true;

    if (ingest->parsed()) {
      Print(ToJson(service.Ingest(ReadFile(log_file),
                                  replace ? msnrec::IngestMode::kReplace
                                          : msnrec::IngestMode::kMerge)));
    } else if (rebuild->parsed()) {
      Print(ToJson(service.Rebuild()));
    } else if (recommend->parsed()) {
      std::optional<std::size_t> n;
      if (list_length > 0) n = list_length;
      Print(ToJson(service.Recommend(user, n)));
    } else if (feedback->parsed()) {
      Print(ToJson(
          service.Feedback(user, target, msnrec::Activity::Parse(activity))));
    } else if (weights->parsed()) {
      Print(ToJson(service.Weights(user)));
      dirty = false;
    } else if (layers->parsed()) {
      Print(ToJson(service.Layers()));
      dirty = false;
    } else if (recompute->parsed()) {
      Print({{"system", msnrec::LayerVectorJson(service.RecomputeSystem())}});
    } else if (health->parsed()) {
      Print(ToJson(service.Health()));
      dirty = false;
    } else if (save->parsed()) {
      service.SaveTo(path);
      dirty = false;
    } else if (load->parsed()) {
      service.LoadFrom(path);
    }
    if (dirty) service.SaveTo(state_path);
    return 0;
  } catch (const msnrec::ServiceError& e) {
    std::cerr << "error (" << e.status() << "): " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
