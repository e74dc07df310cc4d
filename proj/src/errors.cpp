// Copyright 2026 The btlab Authors.
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

#include "btlab/errors.hpp"

namespace btlab {

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateImage: return "DuplicateImage";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kSyntax: return "Syntax";
    case ErrorKind::kSignatureMismatch: return "SignatureMismatch";
    case ErrorKind::kMalformedGraph: return "MalformedGraph";
    case ErrorKind::kVerificationMismatch: return "VerificationMismatch";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kNonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kPrimeMismatch: return "PrimeMismatch";
    case ErrorKind::kTableTooLarge: return "TableTooLarge";
    case ErrorKind::kEmptyWord: return "EmptyWord";
    case ErrorKind::kInvalidLetter: return "InvalidLetter";
    case ErrorKind::kCountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

bool Error::is_input_error() const {
  switch (kind_) {
    case ErrorKind::kMalformedGraph:
    case ErrorKind::kVerificationMismatch:
    case ErrorKind::kNonIntegralCoefficient:
    case ErrorKind::kCountMismatch:
      return false;
    default:
      return true;
  }
}

}  // namespace btlab
