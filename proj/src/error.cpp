// Copyright 2026 The entbasis Authors
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

#include "entbasis/error.hpp"

namespace entbasis {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InvalidDims: return "InvalidDims";
    case ErrorCode::InvalidBipartition: return "InvalidBipartition";
    case ErrorCode::InvalidParty: return "InvalidParty";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::RangeMismatch: return "RangeMismatch";
    case ErrorCode::PartitionInvalid: return "PartitionInvalid";
    case ErrorCode::IncompleteBasis: return "IncompleteBasis";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace entbasis
