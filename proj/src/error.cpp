// Copyright 2026-present the vidrec project
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

#include "vidrec/error.hpp"

namespace vidrec {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kEmptyCatalog: return "empty-catalog";
    case ErrorCode::kDuplicateTitle: return "duplicate-title";
    case ErrorCode::kEmptyVocabulary: return "empty-vocabulary";
    case ErrorCode::kUnknownTerm: return "unknown-term";
    case ErrorCode::kUnknownVideo: return "unknown-video";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace vidrec
