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

// Controlled-English front end.
//
// Teachings follow one template:
//
//   [Subject] [FrequencyAdverb] [Modal [not]] Verb [Prep [Article] Place] .
//
// parse_semantics turns tokens into a SemanticGraph; the narrative-function
// rules (detect_injunctive, detect_descriptive) decide whether the sentence
// introduces a norm. docs/teaching-language.md lists every accepted form.

#ifndef NORMLEARN_NL_PIPELINE_HPP_
#define NORMLEARN_NL_PIPELINE_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normlearn/norm_model.hpp"
#include "normlearn/ontology.hpp"

namespace normlearn {

struct Token {
  std::string text;  // lowercased; multiword lexemes joined by one space
  bool capitalized = false;

  bool operator==(std::string_view s) const { return text == s; }
};

// Lowercases, splits punctuation into its own tokens, expands negative
// contractions (can't, cannot, don't, ...) and, when an ontology is given,
// merges its multiword surfaces longest-match-first.
std::vector<Token> tokenize(std::string_view text,
                            const Ontology* o = nullptr);

enum class AgentKind { kSecondPersonGap, kGenericPeople, kNamed, kNone };
enum class ModalKind { kShouldOughtMust, kCanMay, kImperativeBare, kDo };
enum class Mood { kImperative, kDeclarative, kInterrogative };

std::string_view agent_kind_name(AgentKind a);
std::string_view modal_kind_name(ModalKind m);
std::string_view mood_name(Mood m);

struct SemanticGraph {
  std::string sentence_id;
  std::string event_var = "action1";
  std::vector<Concept> behavior_choices;  // unfiltered lexicon senses
  AgentKind agent = AgentKind::kNone;
  std::optional<Concept> context_concept;
  std::optional<Frequency> frequency;
  std::optional<ModalKind> modal;
  bool negated = false;
  Mood mood = Mood::kDeclarative;

  // Predicate-calculus rendering, e.g. (isa action1 EatingEvent).
  std::vector<std::string> facts() const;
};

std::optional<SemanticGraph> parse_semantics(std::span<const Token> tokens,
                                             const Ontology& o,
                                             std::string_view sentence_id = "s0");

struct InjunctiveMatch {
  DeonticModal evaluation;
  Concept behavior;
  Concept context;
};

struct DescriptiveMatch {
  Frequency prevalence;
  Concept behavior;
  Concept context;
};

// Fires for second-person imperatives and modal declaratives. The behavior
// is the first sense that is an Action or ConfigurationOfAgent.
std::optional<InjunctiveMatch> detect_injunctive(const SemanticGraph& g,
                                                 const Ontology& o);
// Fires for generic-subject declaratives carrying a frequency adverb.
std::optional<DescriptiveMatch> detect_descriptive(const SemanticGraph& g,
                                                   const Ontology& o);

// Evaluation a second-person sentence expresses, before behavior lookup.
std::optional<DeonticModal> injunctive_evaluation(const SemanticGraph& g);

enum class NormKind { kInjunctive, kDescriptive };

struct NormIntroduction {
  NormKind kind;
  std::optional<DeonticModal> evaluation;
  std::optional<Frequency> prevalence;
  Concept behavior;
  Concept context;
  std::string event_id;
  std::string sentence_id;

  Slot slot() const {
    return kind == NormKind::kInjunctive ? Slot::kEvaluation : Slot::kPrevalence;
  }
  SlotValue value() const {
    return kind == NormKind::kInjunctive ? SlotValue(*evaluation)
                                         : SlotValue(*prevalence);
  }
};

// Every rule firing over every surviving behavior sense, in sense order.
std::vector<NormIntroduction> extract_norms(std::string_view text,
                                            const Ontology& o,
                                            std::string_view sentence_id = "s0");

enum class QueryKind { kEvaluationQuery, kPrevalenceQuery };

struct QueryForm {
  QueryKind kind;
  Concept behavior;  // first surviving sense
  Concept context;
  std::vector<Concept> behavior_choices;  // all surviving senses

  Slot slot() const {
    return kind == QueryKind::kEvaluationQuery ? Slot::kEvaluation
                                               : Slot::kPrevalence;
  }
};

// "What is your evaluation of [someone] <gerund> [<place>]?" and
// "How often is someone <gerund> [<place>]?".
std::optional<QueryForm> parse_query(std::string_view text, const Ontology& o);

}  // namespace normlearn

#endif  // NORMLEARN_NL_PIPELINE_HPP_
