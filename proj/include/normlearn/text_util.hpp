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

#ifndef NORMLEARN_TEXT_UTIL_HPP_
#define NORMLEARN_TEXT_UTIL_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace normlearn {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string> split_lines(std::string_view text);
// Whitespace-separated words.
std::vector<std::string> split_words(std::string_view text);
std::vector<std::string> split_on(std::string_view text, char sep);
// Collapses tabs and newlines to single spaces and trims.
std::string single_line(std::string_view text);

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);
// Fixed 4-decimal rendering for human-facing output.
std::string format_4(double value);
bool parse_double(std::string_view text, double* out);

// Throws kParseError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
// Writes through a temporary sibling and renames over the target.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

}  // namespace normlearn

#endif  // NORMLEARN_TEXT_UTIL_HPP_
