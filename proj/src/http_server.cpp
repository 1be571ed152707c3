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

#include "httplib.h"
#include "normlearn/errors.hpp"
#include "normlearn/service.hpp"

namespace normlearn {

using nlohmann::json;

namespace {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownFrame:
    case ErrorCode::kUnknownConcept:
      return 404;
    case ErrorCode::kIoError:
      return 500;
    default:
      return 400;
  }
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

// Runs `fn` and maps every failure to a JSON error body.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    send_json(res, 200, fn());
  } catch (const ServiceError& e) {
    send_json(res, e.status(), e.body());
  } catch (const Error& e) {
    send_json(res, status_for(e.code()),
              {{"error", std::string(error_code_name(e.code()))},
               {"detail", e.what()}});
  } catch (const std::exception& e) {
    send_json(res, 500, {{"error", "InternalError"}, {"detail", e.what()}});
  }
}

std::string text_field(const httplib::Request& req) {
  json body;
  try {
    body = json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw ServiceError(400, "InvalidJson", e.what());
  }
  if (!body.is_object() || !body.contains("text") ||
      !body["text"].is_string()) {
    throw ServiceError(400, "InvalidRequest",
                       "body must be an object with a string `text`");
  }
  return body["text"].get<std::string>();
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(NormService& service) : impl_(std::make_unique<Impl>()) {
  auto& s = impl_->server;
  s.Post("/teach", [&service](const httplib::Request& req,
                              httplib::Response& res) {
    guarded(res, [&] { return service.teach(text_field(req)); });
  });
  s.Post("/query", [&service](const httplib::Request& req,
                              httplib::Response& res) {
    guarded(res, [&] { return service.query(text_field(req)); });
  });
  s.Get("/norms", [&service](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { return service.norms(); });
  });
  s.Get(R"(/norms/([^/]+)/evidence)",
        [&service](const httplib::Request& req, httplib::Response& res) {
          guarded(res, [&] { return service.evidence(req.matches[1].str()); });
        });
  s.Get(R"(/norms/([^/]+)/trajectory)",
        [&service](const httplib::Request& req, httplib::Response& res) {
          guarded(res, [&] {
            if (!req.has_param("slot") || !req.has_param("value")) {
              throw ServiceError(400, "InvalidRequest",
                                 "slot and value query parameters required");
            }
            return service.trajectory(req.matches[1].str(),
                                      req.get_param_value("slot"),
                                      req.get_param_value("value"));
          });
        });
  s.Get("/health", [&service](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { return service.health(); });
  });
  // The console is served from another origin during development.
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    send_json(res, res.status,
              {{"error", res.status == 404 ? "NotFound" : "HttpError"},
               {"detail", "status " + std::to_string(res.status)}});
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  auto& s = impl_->server;
  int bound = port;
  if (port == 0) {
    bound = s.bind_to_any_port(host);
  } else if (!s.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    throw Error(ErrorCode::kIoError,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  thread_ = std::thread([&s] { s.listen_after_bind(); });
  s.wait_until_ready();
  return bound;
}

bool HttpServer::listen_blocking(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace normlearn
