// Copyright 2026 The normlearn Authors.
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

#ifndef NORMLEARN_ERRORS_HPP_
#define NORMLEARN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace normlearn {

enum class ErrorCode {
  // evidence
  kSumNotOne,
  kEmptyFocalSet,
  kForeignElement,
  kTotalConflict,
  kFrameMismatch,
  kInvalidFrame,
  kInvalidMass,
  // ontology
  kCycleDetected,
  kUnknownParent,
  kUnknownConcept,
  // norm store / queries
  kUnknownFrame,
  kNoEvidence,
  kTypeConstraintViolation,
  // corpus and file formats
  kParseError,
  kMissingQueryForPositive,
  kDuplicateSentence,
  kInvalidConfig,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure surfaced by the library is an Error carrying a code. Parse
// failures also carry the 1-based line number (0 when not line oriented).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, std::size_t line = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace normlearn

#endif  // NORMLEARN_ERRORS_HPP_
