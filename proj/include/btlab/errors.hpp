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

#pragma once

#include <stdexcept>
#include <string>

namespace btlab {

enum class ErrorKind {
  kDuplicateImage,
  kOutOfRange,
  kEmptyInput,
  kSyntax,
  kSignatureMismatch,
  kMalformedGraph,
  kVerificationMismatch,
  kNotPrime,
  kNonIntegralCoefficient,
  kLengthMismatch,
  kPrimeMismatch,
  kTableTooLarge,
  kEmptyWord,
  kInvalidLetter,
  kCountMismatch,
};

const char* ToString(ErrorKind kind);

// Single exception type for the library; `kind()` discriminates.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ToString(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Input errors map to CLI exit code 2, internal consistency failures to 1.
  bool is_input_error() const;

 private:
  ErrorKind kind_;
};

}  // namespace btlab
