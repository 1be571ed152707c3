// Copyright 2026 The normlearn Authors.
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

// Operator-facing service: one ontology, one belief store, a single writer.
//
// NormService holds the JSON-level operations shared by the REPL and the HTTP
// endpoints. Teachings take the store exclusively and persist it before
// returning; reads copy a snapshot under a shared lock and compute outside it.

#ifndef NORMLEARN_SERVICE_HPP_
#define NORMLEARN_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>

#include "json.hpp"
#include "normlearn/learning.hpp"
#include "normlearn/norm_model.hpp"
#include "normlearn/ontology.hpp"
#include "normlearn/query.hpp"

namespace normlearn {

struct ServiceConfig {
  std::filesystem::path store_path;  // empty: in-memory only
  std::filesystem::path ontology_path;
  double teaching_mass = kDefaultTeachingMass;
  double belief_threshold = kDefaultBeliefThreshold;
  int listen_port = 8080;

  // Throws kInvalidConfig.
  void validate() const;
};

// An error with an HTTP status, rendered as {"error", "detail"}.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string error, std::string detail)
      : std::runtime_error(error + ": " + detail),
        status_(status),
        error_(std::move(error)),
        detail_(std::move(detail)) {}

  int status() const { return status_; }
  const std::string& error() const { return error_; }
  const std::string& detail() const { return detail_; }
  nlohmann::json body() const { return {{"error", error_}, {"detail", detail_}}; }

 private:
  int status_;
  std::string error_;
  std::string detail_;
};

class NormService {
 public:
  // Loads the ontology and, when the store file exists, the store.
  explicit NormService(ServiceConfig config);
  NormService(ServiceConfig config, Ontology ontology, BeliefStore store);

  const ServiceConfig& config() const { return config_; }
  const Ontology& ontology() const { return ontology_; }
  BeliefStore snapshot() const;

  // {outcome, sentence, frame, slot, value, mass, interval, message}
  nlohmann::json teach(std::string_view text);
  // {answer, interval, believed, frame, slot}. 400 when the question does
  // not match either query template.
  nlohmann::json query(std::string_view text) const;
  nlohmann::json norms() const;
  nlohmann::json evidence(std::string_view frame_id) const;
  nlohmann::json trajectory(std::string_view frame_id, std::string_view slot,
                            std::string_view value) const;
  nlohmann::json health() const;

  // Plain-text table of frames with their most-believed values.
  std::string norms_table() const;
  std::string evidence_table(std::string_view frame_id) const;

 private:
  void persist_locked();

  ServiceConfig config_;
  Ontology ontology_;
  BeliefStore store_;
  mutable std::shared_mutex mu_;
};

// Exposes a NormService over HTTP/JSON on a background thread.
class HttpServer {
 public:
  explicit HttpServer(NormService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds and starts serving; port 0 picks a free port. Returns the port.
  int start(const std::string& host, int port);
  // Serves on the calling thread until stop() is called elsewhere.
  bool listen_blocking(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread thread_;
};

}  // namespace normlearn

#endif  // NORMLEARN_SERVICE_HPP_
