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

// The `normlearn` command line. Exit codes: 0 success, 1 usage or runtime
// error, 2 a required file is missing or does not load, 3 an unparsable
// question.

#ifndef NORMLEARN_CLI_HPP_
#define NORMLEARN_CLI_HPP_

#include <iosfwd>

namespace normlearn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitUnparsableQuestion = 3;

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace normlearn

#endif  // NORMLEARN_CLI_HPP_
