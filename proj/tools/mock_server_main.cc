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

// Serves a mock LM world over the fill-mask HTTP protocol until SIGINT or
// SIGTERM. Prints the bound port on stdout once ready.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tse/tse.h"

int main(int argc, char** argv) {
  CLI::App app{"Mock masked-LM service"};
  std::string world;
  std::string host = "127.0.0.1";
  int port = 0;
  int threads = 8;
  app.add_option("--world", world, "mock world JSON")->required();
  app.add_option("--host", host)->capture_default_str();
  app.add_option("--port", port, "0 picks a free port")->capture_default_str();
  app.add_option("--threads", threads)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  // Block before any server thread starts so that they inherit the mask.
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  tse_backend* backend = nullptr;
  tse_server* server = nullptr;
  if (tse_backend_mock_file(world.c_str(), &backend) != TSE_OK ||
      tse_server_start(backend, host.c_str(), port, threads, &server) != TSE_OK) {
    std::cerr << "error: " << tse_last_error() << "\n";
    tse_backend_free(backend);
    return 2;
  }
  std::printf("%d\n", tse_server_port(server));
  std::fflush(stdout);
  int received = 0;
  sigwait(&signals, &received);
  tse_server_free(server);
  tse_backend_free(backend);
  return 0;
}
