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

#include "normlearn/nl_pipeline.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "normlearn/text_util.hpp"

namespace normlearn {

namespace {

const std::set<std::string, std::less<>>& generic_subjects() {
  static const std::set<std::string, std::less<>> words = {
      "people", "everyone", "everybody", "one", "children", "we"};
  return words;
}

const std::set<std::string, std::less<>>& other_pronouns() {
  static const std::set<std::string, std::less<>> words = {
      "i", "he", "she", "they", "it", "someone"};
  return words;
}

// Frequency adverbs. Beyond often/commonly/sometimes/rarely/never the
// synonyms are an extension of the teaching language.
const std::map<std::string, Frequency, std::less<>>& frequency_adverbs() {
  static const std::map<std::string, Frequency, std::less<>> words = {
      {"always", Frequency::kContinuously},
      {"continuously", Frequency::kContinuously},
      {"often", Frequency::kOften},
      {"commonly", Frequency::kOften},
      {"usually", Frequency::kOften},
      {"frequently", Frequency::kOften},
      {"sometimes", Frequency::kSometimes},
      {"occasionally", Frequency::kSometimes},
      {"rarely", Frequency::kRarely},
      {"seldom", Frequency::kRarely},
      {"never", Frequency::kNever},
  };
  return words;
}

const std::set<std::string, std::less<>>& prepositions() {
  static const std::set<std::string, std::less<>> words = {"in", "at", "on"};
  return words;
}

const std::set<std::string, std::less<>>& articles() {
  static const std::set<std::string, std::less<>> words = {"the", "a", "an"};
  return words;
}

const std::set<std::string, std::less<>>& function_words() {
  static const std::set<std::string, std::less<>> words = [] {
    std::set<std::string, std::less<>> w = {
        "you",   "should", "must", "can",    "may", "ought", "to",
        "not",   "do",     "does", "did",    "please", "will", "is",
        "what",  "how",    "your", "of",     "the", "a",     "an"};
    for (const auto& s : generic_subjects()) w.insert(s);
    for (const auto& s : other_pronouns()) w.insert(s);
    for (const auto& [s, f] : frequency_adverbs()) w.insert(s);
    for (const auto& s : prepositions()) w.insert(s);
    return w;
  }();
  return words;
}

const std::map<std::string, std::vector<std::string>, std::less<>>&
contractions() {
  static const std::map<std::string, std::vector<std::string>, std::less<>>
      table = {
          {"can't", {"can", "not"}},     {"cannot", {"can", "not"}},
          {"don't", {"do", "not"}},      {"doesn't", {"does", "not"}},
          {"didn't", {"did", "not"}},    {"shouldn't", {"should", "not"}},
          {"mustn't", {"must", "not"}},  {"won't", {"will", "not"}},
          {"isn't", {"is", "not"}},      {"aren't", {"are", "not"}},
      };
  return table;
}

bool is_punct(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' ||
         c == ':' || c == '"' || c == '(' || c == ')';
}

bool is_terminal(std::string_view t) {
  return t == "." || t == "!" || t == "?";
}

std::string normalize_apostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2019 RIGHT SINGLE QUOTATION MARK
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        static_cast<unsigned char>(text[i + 2]) == 0x99) {
      out += '\'';
      i += 2;
      continue;
    }
    out += text[i];
  }
  return out;
}

std::vector<Token> merge_multiword(std::vector<Token> tokens,
                                   const Ontology& o) {
  std::vector<std::vector<std::string>> phrases;
  for (const auto& surface : o.multiword_surfaces()) {
    phrases.push_back(split_words(surface));
  }
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    bool merged = false;
    for (const auto& words : phrases) {
      if (i + words.size() > tokens.size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < words.size(); ++k) {
        if (tokens[i + k].text != words[k]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      Token t;
      t.capitalized = tokens[i].capitalized;
      for (std::size_t k = 0; k < words.size(); ++k) {
        if (k) t.text += ' ';
        t.text += words[k];
      }
      out.push_back(std::move(t));
      i += words.size();
      merged = true;
      break;
    }
    if (!merged) out.push_back(std::move(tokens[i++]));
  }
  return out;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const Ontology* o) {
  const std::string normalized = normalize_apostrophes(text);
  std::vector<Token> tokens;
  for (const auto& word : split_words(normalized)) {
    std::string_view w = word;
    while (!w.empty() && is_punct(w.front())) {
      tokens.push_back({std::string(1, w.front()), false});
      w.remove_prefix(1);
    }
    std::vector<Token> trailing;
    while (!w.empty() && is_punct(w.back())) {
      trailing.insert(trailing.begin(), {std::string(1, w.back()), false});
      w.remove_suffix(1);
    }
    if (!w.empty()) {
      const bool cap = std::isupper(static_cast<unsigned char>(w.front())) != 0;
      const std::string lower = to_lower(w);
      auto it = contractions().find(lower);
      if (it != contractions().end()) {
        bool first = true;
        for (const auto& part : it->second) {
          tokens.push_back({part, first && cap});
          first = false;
        }
      } else {
        tokens.push_back({lower, cap});
      }
    }
    for (auto& t : trailing) tokens.push_back(std::move(t));
  }
  if (o) tokens = merge_multiword(std::move(tokens), *o);
  return tokens;
}

std::string_view agent_kind_name(AgentKind a) {
  switch (a) {
    case AgentKind::kSecondPersonGap: return "second-person-gap";
    case AgentKind::kGenericPeople: return "generic-people";
    case AgentKind::kNamed: return "named";
    case AgentKind::kNone: return "none";
  }
  return "?";
}

std::string_view modal_kind_name(ModalKind m) {
  switch (m) {
    case ModalKind::kShouldOughtMust: return "should/ought/must";
    case ModalKind::kCanMay: return "can/may";
    case ModalKind::kImperativeBare: return "imperative-bare";
    case ModalKind::kDo: return "do";
  }
  return "?";
}

std::string_view mood_name(Mood m) {
  switch (m) {
    case Mood::kImperative: return "imperative";
    case Mood::kDeclarative: return "declarative";
    case Mood::kInterrogative: return "interrogative";
  }
  return "?";
}

std::vector<std::string> SemanticGraph::facts() const {
  std::vector<std::string> out;
  switch (agent) {
    case AgentKind::kSecondPersonGap:
      out.push_back("(performedBy " + event_var + " (GapFn :SUBJECT))");
      break;
    case AgentKind::kGenericPeople:
      out.push_back("(performedBy " + event_var + " GenericPeople)");
      break;
    case AgentKind::kNamed:
      out.push_back("(performedBy " + event_var + " NamedAgent)");
      break;
    case AgentKind::kNone:
      break;
  }
  for (const auto& c : behavior_choices) {
    out.push_back("(isa " + event_var + " " + c + ")");
  }
  if (context_concept) {
    out.push_back("(eventOccursAt " + event_var + " context1)");
    out.push_back("(isa context1 " + *context_concept + ")");
  }
  if (frequency) {
    out.push_back("(frequencyOfEventType " + event_var + " " +
                  std::string(label(*frequency)) + ")");
  }
  if (modal) {
    out.push_back("(modality " + event_var + " " +
                  std::string(modal_kind_name(*modal)) + ")");
  }
  if (negated) out.push_back("(not (DrsCaseFn " + sentence_id + "))");
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::span<const Token> tokens) : tokens_(tokens) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  bool at(std::string_view word, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->text == word;
  }
  bool accept(std::string_view word) {
    if (!at(word)) return false;
    ++pos_;
    return true;
  }
  void advance(std::size_t n = 1) { pos_ += n; }

 private:
  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

// [in|at|on] [the|a|an] <location noun>
bool parse_place(Cursor& c, const Ontology& o, std::optional<Concept>* out) {
  const Token* prep = c.peek();
  if (!prep || !prepositions().count(prep->text)) return true;
  c.advance();
  if (const Token* art = c.peek(); art && articles().count(art->text)) {
    c.advance();
  }
  const Token* noun = c.peek();
  if (!noun) return false;
  for (const auto& sense : o.lookup(noun->text, PartOfSpeech::kNoun)) {
    if (o.is_location(sense)) {
      *out = sense;
      c.advance();
      return true;
    }
  }
  return false;
}

bool parse_verb(Cursor& c, const Ontology& o, PartOfSpeech part,
                std::vector<Concept>* out) {
  const Token* verb = c.peek();
  if (!verb) return false;
  *out = o.lookup(verb->text, part);
  if (out->empty()) return false;
  c.advance();
  return true;
}

// Modal chain after a subject. Returns false on forms outside the grammar.
bool parse_modal(Cursor& c, SemanticGraph* g) {
  if (c.at("ought")) {
    if (c.at("to", 1)) {
      c.advance(2);
    } else if (c.at("not", 1) && c.at("to", 2)) {
      g->negated = true;
      c.advance(3);
    } else {
      return false;
    }
    g->modal = ModalKind::kShouldOughtMust;
    return true;
  }
  bool may = false;
  if (c.at("should") || c.at("must")) {
    g->modal = ModalKind::kShouldOughtMust;
  } else if (c.at("can") || c.at("may")) {
    may = c.at("may");
    g->modal = ModalKind::kCanMay;
  } else if (c.at("do") || c.at("does") || c.at("did")) {
    g->modal = ModalKind::kDo;
  } else {
    return true;
  }
  c.advance();
  if (c.accept("not")) {
    // "may not" is ambiguous between permission and prohibition.
    if (may) return false;
    g->negated = true;
  }
  return true;
}

}  // namespace

std::optional<SemanticGraph> parse_semantics(std::span<const Token> tokens,
                                             const Ontology& o,
                                             std::string_view sentence_id) {
  SemanticGraph g;
  g.sentence_id = std::string(sentence_id);
  if (tokens.empty()) return std::nullopt;

  bool question = false;
  if (is_terminal(tokens.back().text)) {
    question = tokens.back().text == "?";
    tokens = tokens.first(tokens.size() - 1);
  }
  if (tokens.empty()) return std::nullopt;
  for (const auto& t : tokens) {
    if (t.text.size() == 1 && is_punct(t.text[0])) return std::nullopt;
  }

  Cursor c(tokens);
  const Token& first = tokens.front();
  const bool starts_with_verb =
      !o.lookup(first.text, PartOfSpeech::kVerb).empty();

  if (first.text == "you") {
    g.agent = AgentKind::kSecondPersonGap;
    g.mood = Mood::kDeclarative;
    c.advance();
  } else if (generic_subjects().count(first.text)) {
    g.agent = AgentKind::kGenericPeople;
    g.mood = Mood::kDeclarative;
    c.advance();
  } else if (other_pronouns().count(first.text)) {
    g.agent = AgentKind::kNone;
    g.mood = Mood::kDeclarative;
    c.advance();
  } else if (first.text == "please" || first.text == "do" || starts_with_verb) {
    g.agent = AgentKind::kSecondPersonGap;
    g.mood = Mood::kImperative;
  } else if (first.capitalized && !function_words().count(first.text) &&
             !o.knows_surface(first.text)) {
    g.agent = AgentKind::kNamed;
    g.mood = Mood::kDeclarative;
    c.advance();
  } else {
    return std::nullopt;
  }

  if (g.mood == Mood::kImperative) {
    c.accept("please");
    if (c.accept("do")) {
      g.modal = ModalKind::kDo;
      g.negated = c.accept("not");
    } else {
      g.modal = ModalKind::kImperativeBare;
    }
  } else {
    if (const Token* t = c.peek()) {
      auto it = frequency_adverbs().find(t->text);
      if (it != frequency_adverbs().end()) {
        g.frequency = it->second;
        c.advance();
      }
    }
    if (!parse_modal(c, &g)) return std::nullopt;
    if (g.frequency && g.modal) return std::nullopt;
  }

  if (!parse_verb(c, o, PartOfSpeech::kVerb, &g.behavior_choices)) {
    return std::nullopt;
  }
  if (!parse_place(c, o, &g.context_concept)) return std::nullopt;
  if (!c.done()) return std::nullopt;
  if (question) g.mood = Mood::kInterrogative;
  return g;
}

std::optional<DeonticModal> injunctive_evaluation(const SemanticGraph& g) {
  if (g.agent != AgentKind::kSecondPersonGap || !g.modal) return std::nullopt;
  if (g.mood == Mood::kInterrogative || g.frequency) return std::nullopt;
  if (g.mood == Mood::kImperative && *g.modal != ModalKind::kImperativeBare &&
      *g.modal != ModalKind::kDo) {
    return std::nullopt;
  }
  switch (*g.modal) {
    case ModalKind::kShouldOughtMust:
    case ModalKind::kDo:
    case ModalKind::kImperativeBare:
      return g.negated ? DeonticModal::kImpermissible : DeonticModal::kObligatory;
    case ModalKind::kCanMay:
      // Scalar implicature: "can"/"may" in an instruction means optional.
      return g.negated ? DeonticModal::kImpermissible : DeonticModal::kOptional;
  }
  return std::nullopt;
}

namespace {

bool descriptive_gate(const SemanticGraph& g) {
  return g.agent == AgentKind::kGenericPeople && g.mood == Mood::kDeclarative &&
         g.frequency && !g.modal && !g.negated;
}

Concept context_or_default(const SemanticGraph& g) {
  return g.context_concept ? *g.context_concept : Concept(kLocationRoot);
}

std::vector<Concept> behavior_senses(const std::vector<Concept>& choices,
                                     const Ontology& o) {
  std::vector<Concept> out;
  for (const auto& c : choices) {
    if (o.is_behavior(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<InjunctiveMatch> detect_injunctive(const SemanticGraph& g,
                                                 const Ontology& o) {
  const auto evaluation = injunctive_evaluation(g);
  if (!evaluation) return std::nullopt;
  const auto senses = behavior_senses(g.behavior_choices, o);
  if (senses.empty()) return std::nullopt;
  return InjunctiveMatch{*evaluation, senses.front(), context_or_default(g)};
}

std::optional<DescriptiveMatch> detect_descriptive(const SemanticGraph& g,
                                                   const Ontology& o) {
  if (!descriptive_gate(g)) return std::nullopt;
  const auto senses = behavior_senses(g.behavior_choices, o);
  if (senses.empty()) return std::nullopt;
  return DescriptiveMatch{*g.frequency, senses.front(), context_or_default(g)};
}

std::vector<NormIntroduction> extract_norms(std::string_view text,
                                            const Ontology& o,
                                            std::string_view sentence_id) {
  const auto tokens = tokenize(text, &o);
  const auto g = parse_semantics(tokens, o, sentence_id);
  if (!g) return {};

  std::vector<NormIntroduction> out;
  auto emit = [&](NormKind kind, std::optional<DeonticModal> e,
                  std::optional<Frequency> p) {
    for (const auto& behavior : behavior_senses(g->behavior_choices, o)) {
      NormIntroduction intro;
      intro.kind = kind;
      intro.evaluation = e;
      intro.prevalence = p;
      intro.behavior = behavior;
      intro.context = context_or_default(*g);
      intro.sentence_id = std::string(sentence_id);
      intro.event_id =
          std::string(sentence_id) + "-e" + std::to_string(out.size() + 1);
      out.push_back(std::move(intro));
    }
  };
  if (const auto e = injunctive_evaluation(*g)) {
    emit(NormKind::kInjunctive, e, std::nullopt);
  } else if (descriptive_gate(*g)) {
    emit(NormKind::kDescriptive, std::nullopt, g->frequency);
  }
  return out;
}

std::optional<QueryForm> parse_query(std::string_view text, const Ontology& o) {
  const auto tokens = tokenize(text, &o);
  if (tokens.empty() || tokens.back().text != "?") return std::nullopt;
  Cursor c(std::span<const Token>(tokens).first(tokens.size() - 1));

  QueryForm q;
  static constexpr std::array<std::string_view, 5> kEvaluationPrefix = {
      "what", "is", "your", "evaluation", "of"};
  static constexpr std::array<std::string_view, 4> kPrevalencePrefix = {
      "how", "often", "is", "someone"};
  auto matches = [&](auto const& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!c.at(prefix[i], i)) return false;
    }
    return true;
  };
  if (matches(kEvaluationPrefix)) {
    q.kind = QueryKind::kEvaluationQuery;
    c.advance(kEvaluationPrefix.size());
    c.accept("someone");
  } else if (matches(kPrevalencePrefix)) {
    q.kind = QueryKind::kPrevalenceQuery;
    c.advance(kPrevalencePrefix.size());
  } else {
    return std::nullopt;
  }

  std::vector<Concept> senses;
  if (!parse_verb(c, o, PartOfSpeech::kVerbGerund, &senses)) return std::nullopt;
  q.behavior_choices = behavior_senses(senses, o);
  if (q.behavior_choices.empty()) return std::nullopt;
  q.behavior = q.behavior_choices.front();

  std::optional<Concept> place;
  if (!parse_place(c, o, &place)) return std::nullopt;
  if (!c.done()) return std::nullopt;
  q.context = place ? *place : Concept(kLocationRoot);
  return q;
}

}  // namespace normlearn
