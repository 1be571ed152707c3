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

// A small concept taxonomy plus a lexicon from word forms to concepts.
//
// File format, one statement per line:
//
//   concept <Name> isa <Parent>
//   lexeme <surface words...> <verb|verb-gerund|noun> <Concept>
//
// `#` starts a comment line; blank lines are ignored. Parents may be
// declared later in the file. The built-in roots are Action,
// ConfigurationOfAgent, Location-Underspecified and Thing; the last one
// houses senses that are none of the first three (e.g. fluid flow).

#ifndef NORMLEARN_ONTOLOGY_HPP_
#define NORMLEARN_ONTOLOGY_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace normlearn {

using Concept = std::string;

inline constexpr std::string_view kActionRoot = "Action";
inline constexpr std::string_view kConfigurationRoot = "ConfigurationOfAgent";
inline constexpr std::string_view kLocationRoot = "Location-Underspecified";
inline constexpr std::string_view kThingRoot = "Thing";

enum class PartOfSpeech { kVerb, kVerbGerund, kNoun };

std::string_view part_name(PartOfSpeech part);
bool parse_part(std::string_view text, PartOfSpeech* out);

struct Lexeme {
  std::string surface;
  PartOfSpeech part;
  Concept concept_name;
};

class Ontology {
 public:
  // Errors: kParseError(line), kCycleDetected, kUnknownParent,
  // kUnknownConcept (lexeme naming an undeclared concept).
  static Ontology load(std::string_view text);
  static Ontology load_file(const std::filesystem::path& path);

  static bool is_root(std::string_view name);

  bool has_concept(std::string_view name) const;
  // Reflexive-transitive closure of the isa edges. kUnknownConcept when
  // either argument is undeclared.
  bool is_specialization(std::string_view c, std::string_view ancestor) const;
  // Behavior slot constraint: Action or ConfigurationOfAgent.
  bool is_behavior(std::string_view c) const;
  // Context slot constraint: Location-Underspecified.
  bool is_location(std::string_view c) const;
  // Roots reachable from c.
  std::vector<std::string> roots_of(std::string_view c) const;

  // Concepts for a surface form, sorted by name, no duplicates.
  std::vector<Concept> lookup(std::string_view surface,
                              PartOfSpeech part) const;
  bool knows_surface(std::string_view surface) const;

  // Multiword surfaces, longest (by word count) first.
  const std::vector<std::string>& multiword_surfaces() const {
    return multiword_;
  }

  std::vector<Concept> concepts() const;
  std::vector<Lexeme> lexemes() const;

  // Normalized text: sorted concept lines, then sorted lexeme lines.
  std::string serialize() const;

 private:
  std::map<Concept, std::set<Concept>> parents_;
  std::map<std::pair<std::string, PartOfSpeech>, std::set<Concept>> lexicon_;
  std::set<std::string> surfaces_;
  std::vector<std::string> multiword_;
};

}  // namespace normlearn

#endif  // NORMLEARN_ONTOLOGY_HPP_
