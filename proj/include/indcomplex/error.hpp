// Copyright 2026 The indcomplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INDCOMPLEX_ERROR_HPP
#define INDCOMPLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace indcomplex {

// Values are part of the C ABI (see indcomplex.h); append only.
enum class ErrorCode : int {
  kInvalidVertex = 1,
  kInvalidInput = 2,
  kEnumerationOverflow = 3,
  kResource = 4,
  kDegenerateQuotient = 5,
  kIncompatibleDims = 6,
  kNotTileable = 7,
  kNoTemplateFound = 8,
  kNoUniqueSolution = 9,
  kNotAForest = 10,
  kParse = 11,
  kIo = 12,
  kInternal = 13,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace indcomplex

#endif  // INDCOMPLEX_ERROR_HPP
