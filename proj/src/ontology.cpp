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

#include "normlearn/ontology.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "normlearn/errors.hpp"
#include "normlearn/text_util.hpp"

namespace normlearn {

namespace {

constexpr std::array<std::string_view, 4> kRoots = {
    kActionRoot, kConfigurationRoot, kLocationRoot, kThingRoot};

}  // namespace

std::string_view part_name(PartOfSpeech part) {
  switch (part) {
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kVerbGerund: return "verb-gerund";
    case PartOfSpeech::kNoun: return "noun";
  }
  return "?";
}

bool parse_part(std::string_view text, PartOfSpeech* out) {
  if (text == "verb") {
    *out = PartOfSpeech::kVerb;
  } else if (text == "verb-gerund") {
    *out = PartOfSpeech::kVerbGerund;
  } else if (text == "noun") {
    *out = PartOfSpeech::kNoun;
  } else {
    return false;
  }
  return true;
}

bool Ontology::is_root(std::string_view name) {
  return std::find(kRoots.begin(), kRoots.end(), name) != kRoots.end();
}

Ontology Ontology::load(std::string_view text) {
  Ontology o;
  for (auto root : kRoots) o.parents_[std::string(root)];

  // Parent references are resolved after the whole file is read.
  std::vector<std::pair<std::string, std::size_t>> parent_refs;
  std::vector<std::pair<std::string, std::size_t>> lexeme_refs;

  std::size_t line_no = 0;
  for (const auto& raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    if (words[0] == "concept") {
      if (words.size() != 4 || words[2] != "isa") {
        throw Error(ErrorCode::kParseError,
                    "expected `concept <Name> isa <Parent>`", line_no);
      }
      if (is_root(words[1])) {
        throw Error(ErrorCode::kParseError,
                    "cannot redefine built-in root " + words[1], line_no);
      }
      if (words[1] == words[3]) {
        throw Error(ErrorCode::kCycleDetected, words[1] + " isa itself",
                    line_no);
      }
      o.parents_[words[1]].insert(words[3]);
      parent_refs.emplace_back(words[3], line_no);
    } else if (words[0] == "lexeme") {
      if (words.size() < 4) {
        throw Error(ErrorCode::kParseError,
                    "expected `lexeme <surface> <part> <Concept>`", line_no);
      }
      PartOfSpeech part;
      if (!parse_part(words[words.size() - 2], &part)) {
        throw Error(ErrorCode::kParseError,
                    "unknown part of speech " + words[words.size() - 2],
                    line_no);
      }
      std::string surface;
      for (std::size_t i = 1; i + 2 < words.size(); ++i) {
        if (!surface.empty()) surface += ' ';
        surface += to_lower(words[i]);
      }
      const std::string& concept_name = words.back();
      o.lexicon_[{surface, part}].insert(concept_name);
      o.surfaces_.insert(surface);
      lexeme_refs.emplace_back(concept_name, line_no);
    } else {
      throw Error(ErrorCode::kParseError,
                  "unknown statement `" + words[0] + "`", line_no);
    }
  }

  for (const auto& [parent, where] : parent_refs) {
    if (!o.parents_.count(parent)) {
      throw Error(ErrorCode::kUnknownParent, parent, where);
    }
  }
  for (const auto& [concept_name, where] : lexeme_refs) {
    if (!o.parents_.count(concept_name)) {
      throw Error(ErrorCode::kUnknownConcept, concept_name, where);
    }
  }

  // Three-colour DFS over child -> parent edges.
  std::map<std::string, int> colour;
  std::vector<std::string> path;
  auto visit = [&](auto&& self, const std::string& node) -> void {
    colour[node] = 1;
    path.push_back(node);
    for (const auto& parent : o.parents_.at(node)) {
      const int c = colour[parent];
      if (c == 1) {
        std::string cycle;
        auto from = std::find(path.begin(), path.end(), parent);
        for (auto it = from; it != path.end(); ++it) cycle += *it + " -> ";
        throw Error(ErrorCode::kCycleDetected, cycle + parent);
      }
      if (c == 0) self(self, parent);
    }
    path.pop_back();
    colour[node] = 2;
  };
  for (const auto& [node, unused] : o.parents_) {
    if (colour[node] == 0) visit(visit, node);
  }

  for (const auto& surface : o.surfaces_) {
    if (surface.find(' ') != std::string::npos) o.multiword_.push_back(surface);
  }
  std::stable_sort(o.multiword_.begin(), o.multiword_.end(),
                   [](const std::string& a, const std::string& b) {
                     return std::count(a.begin(), a.end(), ' ') >
                            std::count(b.begin(), b.end(), ' ');
                   });
  return o;
}

Ontology Ontology::load_file(const std::filesystem::path& path) {
  return load(read_file(path));
}

bool Ontology::has_concept(std::string_view name) const {
  return parents_.find(std::string(name)) != parents_.end();
}

bool Ontology::is_specialization(std::string_view c,
                                 std::string_view ancestor) const {
  if (!has_concept(c)) throw Error(ErrorCode::kUnknownConcept, std::string(c));
  if (!has_concept(ancestor)) {
    throw Error(ErrorCode::kUnknownConcept, std::string(ancestor));
  }
  if (c == ancestor) return true;
  std::vector<std::string> frontier{std::string(c)};
  std::set<std::string> seen;
  while (!frontier.empty()) {
    std::string node = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& parent : parents_.at(node)) {
      if (parent == ancestor) return true;
      if (seen.insert(parent).second) frontier.push_back(parent);
    }
  }
  return false;
}

bool Ontology::is_behavior(std::string_view c) const {
  return has_concept(c) && (is_specialization(c, kActionRoot) ||
                            is_specialization(c, kConfigurationRoot));
}

bool Ontology::is_location(std::string_view c) const {
  return has_concept(c) && is_specialization(c, kLocationRoot);
}

std::vector<std::string> Ontology::roots_of(std::string_view c) const {
  std::vector<std::string> out;
  for (auto root : kRoots) {
    if (is_specialization(c, root)) out.emplace_back(root);
  }
  return out;
}

std::vector<Concept> Ontology::lookup(std::string_view surface,
                                      PartOfSpeech part) const {
  auto it = lexicon_.find({to_lower(surface), part});
  if (it == lexicon_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

bool Ontology::knows_surface(std::string_view surface) const {
  return surfaces_.count(to_lower(surface)) != 0;
}

std::vector<Concept> Ontology::concepts() const {
  std::vector<Concept> out;
  for (const auto& [name, unused] : parents_) out.push_back(name);
  return out;
}

std::vector<Lexeme> Ontology::lexemes() const {
  std::vector<Lexeme> out;
  for (const auto& [key, concept_names] : lexicon_) {
    for (const auto& c : concept_names) out.push_back({key.first, key.second, c});
  }
  return out;
}

std::string Ontology::serialize() const {
  std::vector<std::string> lines;
  for (const auto& [child, parents] : parents_) {
    for (const auto& parent : parents) {
      lines.push_back("concept " + child + " isa " + parent);
    }
  }
  std::sort(lines.begin(), lines.end());
  std::vector<std::string> lex;
  for (const auto& l : lexemes()) {
    lex.push_back("lexeme " + l.surface + " " + std::string(part_name(l.part)) +
                  " " + l.concept_name);
  }
  std::sort(lex.begin(), lex.end());
  std::ostringstream out;
  for (const auto& l : lines) out << l << '\n';
  for (const auto& l : lex) out << l << '\n';
  return out.str();
}

}  // namespace normlearn
