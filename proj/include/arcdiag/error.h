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

#ifndef ARCDIAG_ERROR_H_
#define ARCDIAG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcdiag {

enum class ErrorCode {
  // Malformed input.
  kParse,
  kNotAPermutation,
  kNotNormalized,
  kTooSmall,
  kEmptyBlock,
  kBlockTooLong,
  kAlphabetMismatch,
  kLengthMismatch,
  kNotAWord,
  kOutOfRange,
  // Domain constraints.
  kHasKeratoids,
  kNotAGenerator,
  kNotRepresentable,
  kDegreeExceeded,
  kWouldCycle,
  kAlreadyPresent,
  kNotPresent,
  kSizeMismatch,
  // Work limits.
  kTooLarge,
  kCapExceeded,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// CLI maps them onto process exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arcdiag

#endif  // ARCDIAG_ERROR_H_
