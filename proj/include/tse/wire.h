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

#ifndef TSE_WIRE_H_
#define TSE_WIRE_H_

#include <atomic>
#include <chrono>
#include <memory>
#include <semaphore>
#include <string>
#include <thread>

#include "nlohmann/json.hpp"
#include "tse/error.h"
#include "tse/mlm.h"

namespace httplib {
class Server;
}

namespace tse {

// JSON bodies of the fill-mask HTTP protocol.
//
//   POST /v1/fill-mask
//     {"tokens": [..], "mask_index": i, "top_q": q, "terms_of_interest": [..]}
//     -> {"vocab_size": n, "top": [{"term", "logprob"}],
//         "lookup": {term: {"rank", "logprob"} | null}}
//   GET /v1/vocab/contains?term=..  -> {"in_vocab": bool}
//   GET /v1/info -> {"model_id", "vocab_size", "max_context", "max_top_q"}
//
// Errors are 400 {"error": code, "detail": text}; 503 signals overload.
namespace wire {

inline constexpr const char* kInvalidRequest = "invalid_request";
inline constexpr const char* kContextTooLong = "context_too_long";
inline constexpr const char* kTopQTooLarge = "top_q_too_large";
inline constexpr const char* kOverloaded = "overloaded";
inline constexpr const char* kInternal = "internal";

nlohmann::json RequestToJson(const MaskedPattern& pattern, std::size_t top_q,
                             const std::vector<std::string>& terms);
struct FillMaskRequest {
  MaskedPattern pattern;
  std::size_t top_q = 0;
  std::vector<std::string> terms;
};
// Throws Error(kValidation) on malformed bodies.
FillMaskRequest RequestFromJson(const nlohmann::json& j);

nlohmann::json CompletionToJson(const Completion& completion);
Completion CompletionFromJson(const nlohmann::json& j);

nlohmann::json InfoToJson(const BackendInfo& info);
BackendInfo InfoFromJson(const nlohmann::json& j);

// The protocol error code for a failure raised by a backend.
const char* ErrorToWireCode(ErrorCode code);
ErrorCode WireCodeToError(const std::string& code);

}  // namespace wire

struct HttpBackendOptions {
  std::chrono::milliseconds timeout{30000};
  int max_attempts = 5;  // for transport errors and 503 responses
  std::chrono::milliseconds initial_backoff{100};
  int max_in_flight = 8;
};

// Client side of the protocol. Fetches /v1/info on construction and throws
// Error(kTransport) if the service cannot be reached.
class HttpBackend final : public MlmBackend {
 public:
  explicit HttpBackend(std::string base_url, HttpBackendOptions options = {});
  ~HttpBackend() override;

  BackendInfo Info() const override { return info_; }
  Completion Complete(
      const MaskedPattern& pattern, std::size_t top_q,
      const std::vector<std::string>& terms_of_interest) const override;
  bool Contains(std::string_view term) const override;
  std::string id() const override { return info_.model_id + "@" + base_url_; }

 private:
  struct Response {
    int status = 0;
    std::string body;
  };
  Response Send(const std::string& method, const std::string& path,
                const std::string& body) const;
  nlohmann::json Call(const std::string& method, const std::string& path,
                      const std::string& body) const;

  std::string base_url_;
  HttpBackendOptions options_;
  BackendInfo info_;
  mutable std::counting_semaphore<1 << 16> in_flight_;
};

struct ServerOptions {
  int max_in_flight = 64;  // further concurrent requests get 503
  int threads = 8;
};

// Serves any MlmBackend over the protocol. Used as a stand-in for the model
// service and by the conformance tests.
class MlmServer {
 public:
  MlmServer(std::shared_ptr<const MlmBackend> backend,
            ServerOptions options = {});
  ~MlmServer();
  MlmServer(const MlmServer&) = delete;
  MlmServer& operator=(const MlmServer&) = delete;

  // Binds and serves on a background thread. Port 0 picks a free port.
  int Start(const std::string& host = "127.0.0.1", int port = 0);
  // Binds and serves on the calling thread until Stop().
  void Run(const std::string& host, int port);
  void Stop();
  int port() const { return port_; }

 private:
  void Install();

  std::shared_ptr<const MlmBackend> backend_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::atomic<int> in_flight_{0};
  int port_ = 0;
};

}  // namespace tse

#endif  // TSE_WIRE_H_
