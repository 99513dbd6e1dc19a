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

#ifndef TSE_ERROR_H_
#define TSE_ERROR_H_

#include <stdexcept>
#include <string>

namespace tse {

// Failure categories. The CLI maps these onto process exit codes and the C
// API onto tse_status values.
enum class ErrorCode {
  kValidation,
  kIo,
  kEmptyCorpus,
  kInvalidOccurrence,
  kMissingSeed,
  kOovSeed,
  kTransport,
  kTruncation,
  kCapability,
  kInvalidWorld,
  kCorruptTable,
  kUndefinedMetric,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // Transport failures and backend overload may succeed on retry.
  bool retryable() const { return code_ == ErrorCode::kTransport; }

 private:
  ErrorCode code_;
};

}  // namespace tse

#endif  // TSE_ERROR_H_
