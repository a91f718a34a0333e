// Copyright 2026 The tnqpi Authors
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

#include "tnqpi/error.hpp"

namespace tnqpi {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDomain: return "invalid-domain";
    case ErrorCode::kZeroQubitDimension: return "zero-qubit-dimension";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kZeroVector: return "zero-vector";
    case ErrorCode::kRankDeficient: return "rank-deficient";
    case ErrorCode::kNonFiniteSample: return "non-finite-sample";
    case ErrorCode::kZeroNorm: return "zero-norm";
    case ErrorCode::kNonIsometric: return "non-isometric";
    case ErrorCode::kDeadBranch: return "dead-branch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDiverged: return "diverged";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kFormat: return "format";
  }
  return "unknown";
}

}  // namespace tnqpi
