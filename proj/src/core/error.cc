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

#include "tse/error.h"

namespace tse {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kInvalidOccurrence: return "invalid_occurrence";
    case ErrorCode::kMissingSeed: return "missing_seed";
    case ErrorCode::kOovSeed: return "oov_seed";
    case ErrorCode::kTransport: return "transport";
    case ErrorCode::kTruncation: return "truncation";
    case ErrorCode::kCapability: return "capability";
    case ErrorCode::kInvalidWorld: return "invalid_world";
    case ErrorCode::kCorruptTable: return "corrupt_table";
    case ErrorCode::kUndefinedMetric: return "undefined_metric";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace tse
