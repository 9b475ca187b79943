// Copyright 2026 The arcdiag Authors.
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

#include "arcdiag/error.h"

namespace arcdiag {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kEmptyBlock: return "EmptyBlock";
    case ErrorCode::kBlockTooLong: return "BlockTooLong";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotAWord: return "NotAWord";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kHasKeratoids: return "HasKeratoids";
    case ErrorCode::kNotAGenerator: return "NotAGenerator";
    case ErrorCode::kNotRepresentable: return "NotRepresentable";
    case ErrorCode::kDegreeExceeded: return "DegreeExceeded";
    case ErrorCode::kWouldCycle: return "WouldCycle";
    case ErrorCode::kAlreadyPresent: return "AlreadyPresent";
    case ErrorCode::kNotPresent: return "NotPresent";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace arcdiag
