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

#include "normlearn/errors.hpp"

namespace normlearn {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSumNotOne: return "SumNotOne";
    case ErrorCode::kEmptyFocalSet: return "EmptyFocalSet";
    case ErrorCode::kForeignElement: return "ForeignElement";
    case ErrorCode::kTotalConflict: return "TotalConflict";
    case ErrorCode::kFrameMismatch: return "FrameMismatch";
    case ErrorCode::kInvalidFrame: return "InvalidFrame";
    case ErrorCode::kInvalidMass: return "InvalidMass";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kUnknownParent: return "UnknownParent";
    case ErrorCode::kUnknownConcept: return "UnknownConcept";
    case ErrorCode::kUnknownFrame: return "UnknownFrame";
    case ErrorCode::kNoEvidence: return "NoEvidence";
    case ErrorCode::kTypeConstraintViolation: return "TypeConstraintViolation";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingQueryForPositive: return "MissingQueryForPositive";
    case ErrorCode::kDuplicateSentence: return "DuplicateSentence";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail,
                           std::size_t line) {
  std::string msg(error_code_name(code));
  if (line > 0) msg += " (line " + std::to_string(line) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail, std::size_t line)
    : std::runtime_error(format_message(code, detail, line)),
      code_(code),
      line_(line) {}

}  // namespace normlearn
