/*
 * Copyright 2026 The TSE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tse/wire.h"

#include "httplib.h"

namespace tse {
namespace wire {

using nlohmann::json;

json RequestToJson(const MaskedPattern& pattern, std::size_t top_q,
                   const std::vector<std::string>& terms) {
  return json{{"tokens", pattern.tokens()},
              {"mask_index", pattern.mask_index()},
              {"top_q", top_q},
              {"terms_of_interest", terms}};
}

FillMaskRequest RequestFromJson(const json& j) {
  try {
    FillMaskRequest req;
    auto tokens = j.at("tokens").get<std::vector<std::string>>();
    const auto mask_index = j.at("mask_index").get<long long>();
    const auto top_q = j.at("top_q").get<long long>();
    if (mask_index < 0) throw Error(ErrorCode::kValidation, "negative mask_index");
    if (top_q < 1) throw Error(ErrorCode::kValidation, "top_q must be >= 1");
    req.pattern = MaskedPattern(std::move(tokens),
                                static_cast<std::size_t>(mask_index));
    req.top_q = static_cast<std::size_t>(top_q);
    req.terms = j.value("terms_of_interest", std::vector<std::string>{});
    return req;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kValidation, std::string("bad request body: ") + e.what());
  }
}

json CompletionToJson(const Completion& completion) {
  json top = json::array();
  for (const auto& e : completion.top) {
    top.push_back(json{{"term", e.term}, {"logprob", e.logprob}});
  }
  json lookup = json::object();
  for (const auto& [term, rank] : completion.lookup.entries()) {
    if (rank) {
      lookup[term] = json{{"rank", rank->rank}, {"logprob", rank->logprob}};
    } else {
      lookup[term] = nullptr;
    }
  }
  return json{{"vocab_size", completion.vocab_size},
              {"top", std::move(top)},
              {"lookup", std::move(lookup)}};
}

Completion CompletionFromJson(const json& j) {
  try {
    Completion out;
    out.vocab_size = j.at("vocab_size").get<std::size_t>();
    for (const auto& e : j.at("top")) {
      out.top.push_back(
          {e.at("term").get<std::string>(), e.at("logprob").get<double>()});
    }
    for (const auto& [term, value] : j.at("lookup").items()) {
      if (value.is_null()) {
        out.lookup.Set(term, std::nullopt);
      } else {
        out.lookup.Set(term, TermRank{value.at("rank").get<std::size_t>(),
                                      value.at("logprob").get<double>()});
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kTransport,
                std::string("malformed fill-mask response: ") + e.what());
  }
}

json InfoToJson(const BackendInfo& info) {
  return json{{"model_id", info.model_id},
              {"vocab_size", info.vocab_size},
              {"max_context", info.max_context},
              {"max_top_q", info.max_top_q}};
}

BackendInfo InfoFromJson(const json& j) {
  try {
    BackendInfo info;
    info.model_id = j.at("model_id").get<std::string>();
    info.vocab_size = j.at("vocab_size").get<std::size_t>();
    info.max_context = j.value("max_context", std::size_t{0});
    info.max_top_q = j.value("max_top_q", std::size_t{0});
    return info;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kTransport, std::string("malformed info: ") + e.what());
  }
}

const char* ErrorToWireCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTruncation:
      return kContextTooLong;
    case ErrorCode::kCapability:
      return kTopQTooLarge;
    case ErrorCode::kValidation:
      return kInvalidRequest;
    default:
      return kInternal;
  }
}

ErrorCode WireCodeToError(const std::string& code) {
  if (code == kContextTooLong) return ErrorCode::kTruncation;
  if (code == kTopQTooLarge) return ErrorCode::kCapability;
  if (code == kInvalidRequest) return ErrorCode::kValidation;
  if (code == kOverloaded) return ErrorCode::kTransport;
  return ErrorCode::kInternal;
}

}  // namespace wire

// --- client ---------------------------------------------------------------

HttpBackend::HttpBackend(std::string base_url, HttpBackendOptions options)
    : base_url_(std::move(base_url)),
      options_(options),
      in_flight_(std::max(1, options.max_in_flight)) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
  info_ = wire::InfoFromJson(Call("GET", "/v1/info", ""));
}

HttpBackend::~HttpBackend() = default;

HttpBackend::Response HttpBackend::Send(const std::string& method,
                                        const std::string& path,
                                        const std::string& body) const {
  httplib::Client client(base_url_);
  const auto secs = options_.timeout.count() / 1000;
  const auto usecs = (options_.timeout.count() % 1000) * 1000;
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);
  httplib::Result res = method == "POST"
                            ? client.Post(path, body, "application/json")
                            : client.Get(path);
  if (!res) {
    throw Error(ErrorCode::kTransport,
                "backend unreachable at " + base_url_ + path + ": " +
                    httplib::to_string(res.error()));
  }
  return {res->status, res->body};
}

nlohmann::json HttpBackend::Call(const std::string& method,
                                 const std::string& path,
                                 const std::string& body) const {
  in_flight_.acquire();
  struct Release {
    std::counting_semaphore<1 << 16>& s;
    ~Release() { s.release(); }
  } release{in_flight_};

  auto backoff = options_.initial_backoff;
  std::string last_error;
  for (int attempt = 1; attempt <= std::max(1, options_.max_attempts); ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    Response res;
    try {
      res = Send(method, path, body);
    } catch (const Error& e) {
      last_error = e.what();
      continue;
    }
    if (res.status == 503) {
      last_error = "backend overloaded (503)";
      continue;
    }
    nlohmann::json j = nlohmann::json::parse(res.body, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorCode::kTransport,
                  "non-JSON response from " + path + " (HTTP " +
                      std::to_string(res.status) + ")");
    }
    if (res.status == 200) return j;
    const std::string code = j.value("error", std::string(wire::kInternal));
    const std::string detail = j.value("detail", std::string());
    throw Error(wire::WireCodeToError(code),
                "backend rejected request (" + code + "): " + detail);
  }
  throw Error(ErrorCode::kTransport,
              "giving up after " + std::to_string(options_.max_attempts) +
                  " attempts: " + last_error);
}

Completion HttpBackend::Complete(
    const MaskedPattern& pattern, std::size_t top_q,
    const std::vector<std::string>& terms_of_interest) const {
  ValidateRequest(info_, pattern, top_q);
  const auto body = wire::RequestToJson(pattern, top_q, terms_of_interest).dump();
  return wire::CompletionFromJson(Call("POST", "/v1/fill-mask", body));
}

bool HttpBackend::Contains(std::string_view term) const {
  const std::string path =
      "/v1/vocab/contains?term=" + httplib::detail::encode_query_param(std::string(term));
  const auto j = Call("GET", path, "");
  return j.value("in_vocab", false);
}

// --- server ---------------------------------------------------------------

namespace {

void SendError(httplib::Response& res, int status, const std::string& code,
               const std::string& detail) {
  res.status = status;
  res.set_content(nlohmann::json{{"error", code}, {"detail", detail}}.dump(),
                  "application/json");
}

}  // namespace

MlmServer::MlmServer(std::shared_ptr<const MlmBackend> backend,
                     ServerOptions options)
    : backend_(std::move(backend)),
      options_(options),
      server_(std::make_unique<httplib::Server>()) {
  Install();
}

MlmServer::~MlmServer() { Stop(); }

void MlmServer::Install() {
  const int threads = std::max(1, options_.threads);
  server_->new_task_queue = [threads] { return new httplib::ThreadPool(threads); };

  server_->Get("/v1/info", [this](const httplib::Request&, httplib::Response& res) {
    res.set_content(wire::InfoToJson(backend_->Info()).dump(), "application/json");
  });

  server_->Get("/v1/vocab/contains",
               [this](const httplib::Request& req, httplib::Response& res) {
                 if (!req.has_param("term")) {
                   SendError(res, 400, wire::kInvalidRequest, "missing term parameter");
                   return;
                 }
                 const bool in = backend_->Contains(req.get_param_value("term"));
                 res.set_content(nlohmann::json{{"in_vocab", in}}.dump(),
                                 "application/json");
               });

  server_->Post("/v1/fill-mask", [this](const httplib::Request& req,
                                        httplib::Response& res) {
    struct Guard {
      std::atomic<int>& n;
      ~Guard() { --n; }
    } guard{in_flight_};
    if (++in_flight_ > options_.max_in_flight) {
      SendError(res, 503, wire::kOverloaded, "too many in-flight requests");
      return;
    }
    const auto body = nlohmann::json::parse(req.body, nullptr, false);
    if (body.is_discarded()) {
      SendError(res, 400, wire::kInvalidRequest, "body is not JSON");
      return;
    }
    try {
      const auto parsed = wire::RequestFromJson(body);
      const auto completion =
          backend_->Complete(parsed.pattern, parsed.top_q, parsed.terms);
      res.set_content(wire::CompletionToJson(completion).dump(), "application/json");
    } catch (const Error& e) {
      SendError(res, 400, wire::ErrorToWireCode(e.code()), e.what());
    } catch (const std::exception& e) {
      SendError(res, 500, wire::kInternal, e.what());
    }
  });
}

int MlmServer::Start(const std::string& host, int port) {
  port_ = port == 0 ? server_->bind_to_any_port(host)
                    : (server_->bind_to_port(host, port) ? port : -1);
  if (port_ < 0) {
    throw Error(ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void MlmServer::Run(const std::string& host, int port) {
  if (!server_->bind_to_port(host, port)) {
    throw Error(ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  }
  port_ = port;
  server_->listen_after_bind();
}

void MlmServer::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace tse
