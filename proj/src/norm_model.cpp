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

#include "normlearn/norm_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "normlearn/errors.hpp"
#include "normlearn/text_util.hpp"

namespace normlearn {

// --- alphabets --------------------------------------------------------------

std::string_view slot_name(Slot slot) {
  return slot == Slot::kEvaluation ? "evaluation" : "prevalence";
}

std::optional<Slot> parse_slot(std::string_view text) {
  if (text == "evaluation") return Slot::kEvaluation;
  if (text == "prevalence") return Slot::kPrevalence;
  return std::nullopt;
}

std::string_view label(DeonticModal m) {
  switch (m) {
    case DeonticModal::kObligatory: return "Obligatory";
    case DeonticModal::kOptional: return "Optional";
    case DeonticModal::kImpermissible: return "Impermissible";
    case DeonticModal::kPermissible: return "Permissible";
    case DeonticModal::kOmissible: return "Omissible";
  }
  return "?";
}

std::string_view label(Frequency f) {
  switch (f) {
    case Frequency::kContinuously: return "Continuously";
    case Frequency::kOften: return "Often";
    case Frequency::kSometimes: return "Sometimes";
    case Frequency::kRarely: return "Rarely";
    case Frequency::kNever: return "Never";
    case Frequency::kMoreThanSometimes: return "MoreThanSometimes";
    case Frequency::kLessThanSometimes: return "LessThanSometimes";
  }
  return "?";
}

std::string_view label(const SlotValue& v) {
  return std::visit([](auto x) { return label(x); }, v);
}

Slot slot_of(const SlotValue& v) {
  return std::holds_alternative<DeonticModal>(v) ? Slot::kEvaluation
                                                 : Slot::kPrevalence;
}

bool is_first_order(const SlotValue& v) {
  if (const auto* m = std::get_if<DeonticModal>(&v)) {
    return *m != DeonticModal::kPermissible && *m != DeonticModal::kOmissible;
  }
  const auto f = std::get<Frequency>(v);
  return f != Frequency::kMoreThanSometimes && f != Frequency::kLessThanSometimes;
}

std::optional<SlotValue> parse_value(Slot slot, std::string_view text) {
  for (const auto& v : answer_ladder(slot)) {
    if (label(v) == text) return v;
  }
  return std::nullopt;
}

std::vector<std::string> modal_set(DeonticModal m) {
  switch (m) {
    case DeonticModal::kPermissible: return {"Obligatory", "Optional"};
    case DeonticModal::kOmissible: return {"Optional", "Impermissible"};
    default: return {std::string(label(m))};
  }
}

std::vector<std::string> frequency_set(Frequency f) {
  switch (f) {
    case Frequency::kMoreThanSometimes: return {"Continuously", "Often"};
    case Frequency::kLessThanSometimes: return {"Rarely", "Never"};
    default: return {std::string(label(f))};
  }
}

const FramePtr& evaluation_fod() {
  static const FramePtr fod =
      FrameOfDiscernment::create({"Obligatory", "Optional", "Impermissible"});
  return fod;
}

const FramePtr& prevalence_fod() {
  static const FramePtr fod = FrameOfDiscernment::create(
      {"Continuously", "Often", "Sometimes", "Rarely", "Never"});
  return fod;
}

const FramePtr& fod_for(Slot slot) {
  return slot == Slot::kEvaluation ? evaluation_fod() : prevalence_fod();
}

FocalSet element_set(const SlotValue& v) {
  if (const auto* m = std::get_if<DeonticModal>(&v)) {
    return FocalSet::of(evaluation_fod(), modal_set(*m));
  }
  return FocalSet::of(prevalence_fod(), frequency_set(std::get<Frequency>(v)));
}

std::vector<SlotValue> first_order_values(Slot slot) {
  if (slot == Slot::kEvaluation) {
    return {DeonticModal::kObligatory, DeonticModal::kOptional,
            DeonticModal::kImpermissible};
  }
  return {Frequency::kContinuously, Frequency::kOften, Frequency::kSometimes,
          Frequency::kRarely, Frequency::kNever};
}

std::vector<SlotValue> answer_ladder(Slot slot) {
  auto out = first_order_values(slot);
  if (slot == Slot::kEvaluation) {
    out.emplace_back(DeonticModal::kPermissible);
    out.emplace_back(DeonticModal::kOmissible);
  } else {
    out.emplace_back(Frequency::kMoreThanSometimes);
    out.emplace_back(Frequency::kLessThanSometimes);
  }
  return out;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kLearnedNewFrame: return "learned-new-frame";
    case Outcome::kMergedIntoExisting: return "merged-into-existing";
    case Outcome::kNoNormDetected: return "no-norm-detected";
  }
  return "?";
}

std::optional<Outcome> parse_outcome(std::string_view text) {
  for (auto o : {Outcome::kLearnedNewFrame, Outcome::kMergedIntoExisting,
                 Outcome::kNoNormDetected}) {
    if (outcome_name(o) == text) return o;
  }
  return std::nullopt;
}

// --- store ------------------------------------------------------------------

namespace {

std::optional<std::size_t> numeric_suffix(std::string_view id,
                                          std::string_view prefix) {
  if (id.size() <= prefix.size() || id.substr(0, prefix.size()) != prefix) {
    return std::nullopt;
  }
  std::size_t n = 0;
  const char* first = id.data() + prefix.size();
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

// Orders `norm2` before `norm10`; ids without the prefix sort after, by text.
bool id_less(std::string_view a, std::string_view b, std::string_view prefix) {
  const auto na = numeric_suffix(a, prefix);
  const auto nb = numeric_suffix(b, prefix);
  if (na && nb) return *na < *nb;
  if (na != nb) return na.has_value();
  return a < b;
}

}  // namespace

const NormFrame* BeliefStore::find(std::string_view behavior,
                                   std::string_view context) const {
  for (const auto& f : frames_) {
    if (f.behavior == behavior && f.context == context) return &f;
  }
  return nullptr;
}

const NormFrame* BeliefStore::find_by_id(std::string_view id) const {
  for (const auto& f : frames_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const NormFrame& BeliefStore::frame(std::string_view id) const {
  const NormFrame* f = find_by_id(id);
  if (!f) throw Error(ErrorCode::kUnknownFrame, std::string(id));
  return *f;
}

NormFrame* BeliefStore::find_mutable(std::string_view id) {
  for (auto& f : frames_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

FrameLookup BeliefStore::find_or_create_frame(const Concept& behavior,
                                              const Concept& context,
                                              const Ontology& o) {
  if (!o.is_behavior(behavior)) {
    throw Error(ErrorCode::kTypeConstraintViolation,
                behavior + " is not an Action or ConfigurationOfAgent");
  }
  if (!o.is_location(context)) {
    throw Error(ErrorCode::kTypeConstraintViolation,
                context + " is not a Location-Underspecified");
  }
  if (const NormFrame* existing = find(behavior, context)) {
    return {existing->id, false};
  }
  NormFrame f;
  f.id = "norm" + std::to_string(next_frame_++);
  f.behavior = behavior;
  f.context = context;
  frames_.push_back(std::move(f));
  dirty_ = true;
  return {frames_.back().id, true};
}

const EvidenceRecord& BeliefStore::record_evidence(
    std::string_view frame_id, Slot slot, const FocalSet& focal, double mass,
    const std::string& event_id, const std::string& sentence_id) {
  NormFrame* f = find_mutable(frame_id);
  if (!f) throw Error(ErrorCode::kUnknownFrame, std::string(frame_id));
  if (!same_frame(focal.frame(), fod_for(slot))) {
    throw Error(ErrorCode::kForeignElement,
                "focal set is not over the " + std::string(slot_name(slot)) +
                    " frame");
  }
  if (!(mass > 0.0 && mass <= 1.0)) {
    throw Error(ErrorCode::kInvalidMass,
                "evidence mass " + format_double(mass) + " outside (0,1]");
  }
  if (const auto n = numeric_suffix(event_id, "pe")) {
    next_event_ = std::max(next_event_, *n + 1);
  }
  auto& body = f->evidence(slot);
  body.push_back({event_id, sentence_id, slot, focal, mass});
  dirty_ = true;
  return body.back();
}

void BeliefStore::log_discourse(DiscourseEntry entry) {
  if (const auto n = numeric_suffix(entry.sentence_id, "s")) {
    next_sentence_ = std::max(next_sentence_, *n + 1);
  }
  discourse_.push_back(std::move(entry));
  dirty_ = true;
}

std::string BeliefStore::next_sentence_id() const {
  return "s" + std::to_string(next_sentence_);
}

std::string BeliefStore::next_event_id() const {
  return "pe" + std::to_string(next_event_);
}

std::size_t BeliefStore::evidence_count() const {
  std::size_t n = 0;
  for (const auto& f : frames_) {
    n += f.evaluation_evidence.size() + f.prevalence_evidence.size();
  }
  return n;
}

MassFunction slot_mass(const NormFrame& frame, Slot slot) {
  const auto& body = frame.evidence(slot);
  if (body.empty()) {
    throw Error(ErrorCode::kNoEvidence,
                frame.id + " has no " + std::string(slot_name(slot)) +
                    " evidence");
  }
  std::vector<MassFunction> sources;
  sources.reserve(body.size());
  for (const auto& r : body) sources.push_back(r.as_mass());
  return combine_all(sources);
}

MassFunction slot_mass(const BeliefStore& store, std::string_view frame_id,
                       Slot slot) {
  return slot_mass(store.frame(frame_id), slot);
}

std::vector<SlotValue> most_believed_values(const MassFunction& m, Slot slot) {
  std::vector<std::pair<SlotValue, double>> scored;
  double best = -1.0;
  for (const auto& v : first_order_values(slot)) {
    const double b = belief(m, element_set(v));
    scored.emplace_back(v, b);
    best = std::max(best, b);
  }
  std::vector<SlotValue> out;
  for (const auto& [v, b] : scored) {
    if (std::abs(b - best) <= kMassTolerance) out.push_back(v);
  }
  return out;
}

std::set<NormClass> classify(const BeliefStore& store,
                             std::string_view frame_id) {
  const NormFrame& f = store.frame(frame_id);
  std::set<NormClass> out;
  auto all_in = [](const std::vector<SlotValue>& values,
                   std::initializer_list<SlotValue> allowed) {
    return std::all_of(values.begin(), values.end(), [&](const SlotValue& v) {
      return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
    });
  };
  if (!f.prevalence_evidence.empty()) {
    const auto top =
        most_believed_values(slot_mass(f, Slot::kPrevalence), Slot::kPrevalence);
    if (all_in(top, {Frequency::kOften, Frequency::kContinuously})) {
      out.insert(NormClass::kDescriptiveNorm);
    }
  }
  if (!f.evaluation_evidence.empty()) {
    const auto top = most_believed_values(slot_mass(f, Slot::kEvaluation),
                                          Slot::kEvaluation);
    if (all_in(top, {DeonticModal::kObligatory, DeonticModal::kImpermissible})) {
      out.insert(NormClass::kInjunctiveNorm);
    }
  }
  return out;
}

// --- persistence ------------------------------------------------------------

namespace {

constexpr std::string_view kStoreHeader = "# normlearn belief store v1";

struct SExpr {
  std::string atom;
  std::vector<SExpr> items;
  bool is_list = false;
};

class SExprReader {
 public:
  SExprReader(std::string_view text, std::size_t line)
      : text_(text), line_(line) {}

  SExpr read_all() {
    SExpr e = read();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, what, line_);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of line");
    SExpr e;
    if (text_[pos_] == '(') {
      ++pos_;
      e.is_list = true;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) fail("unbalanced parentheses");
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (text_[pos_] == ')') fail("unexpected ')'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool is_atom(const SExpr& e) { return !e.is_list && !e.atom.empty(); }

bool is_list_of(const SExpr& e, std::size_t n, std::string_view head) {
  return e.is_list && e.items.size() == n && is_atom(e.items[0]) &&
         e.items[0].atom == head;
}

std::string render_event(const EvidenceRecord& r) {
  return "(PresentationEventFn " + r.sentence_id + " " + r.event_id + ")";
}

std::string render_focal(const EvidenceRecord& r, const std::string& frame_id) {
  std::string out = "(";
  bool first = true;
  for (const auto& member : r.focal.members()) {
    if (!first) out += ' ';
    first = false;
    out += "(" + std::string(slot_name(r.slot)) + " " + frame_id + " " +
           member + ")";
  }
  return out + ")";
}

}  // namespace

std::string save_store(const BeliefStore& store) {
  std::vector<const NormFrame*> frames;
  for (const auto& f : store.frames()) frames.push_back(&f);
  std::stable_sort(frames.begin(), frames.end(),
                   [](const NormFrame* a, const NormFrame* b) {
                     return id_less(a->id, b->id, "norm");
                   });

  std::ostringstream out;
  out << kStoreHeader << '\n';
  for (const NormFrame* f : frames) {
    out << "(isa " << f->id << " Norm)\n";
    out << "(context " << f->id << ' ' << f->context << ")\n";
    out << "(behavior " << f->id << ' ' << f->behavior << ")\n";
    std::vector<const EvidenceRecord*> records;
    for (const auto& r : f->evaluation_evidence) records.push_back(&r);
    for (const auto& r : f->prevalence_evidence) records.push_back(&r);
    std::stable_sort(records.begin(), records.end(),
                     [](const EvidenceRecord* a, const EvidenceRecord* b) {
                       return id_less(a->event_id, b->event_id, "pe");
                     });
    for (const EvidenceRecord* r : records) {
      out << "(evidenceFor " << render_event(*r) << ' '
          << render_focal(*r, f->id) << ' ' << format_double(r->mass) << ")\n";
    }
  }
  for (const auto& d : store.discourse_log()) {
    out << "#discourse " << d.sentence_id << ' ' << outcome_name(d.outcome)
        << ' ' << single_line(d.text) << '\n';
    for (const auto& [behavior, context] : d.discarded) {
      out << "#discarded " << d.sentence_id << ' ' << behavior << ' '
          << context << '\n';
    }
  }
  return out.str();
}

BeliefStore load_store(std::string_view text) {
  BeliefStore store;
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines[0]) != kStoreHeader) {
    throw Error(ErrorCode::kParseError, "missing store header", 1);
  }

  auto frame_for = [&](const std::string& id, std::size_t line) -> NormFrame& {
    NormFrame* f = store.find_mutable(id);
    if (!f) throw Error(ErrorCode::kParseError, "undeclared frame " + id, line);
    return *f;
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = trim(lines[i]);
    if (line.empty()) continue;

    if (line.substr(0, 11) == "#discourse ") {
      const std::string_view rest = line.substr(11);
      const auto sp1 = rest.find(' ');
      if (sp1 == std::string_view::npos) {
        throw Error(ErrorCode::kParseError, "malformed #discourse", line_no);
      }
      const auto sp2 = rest.find(' ', sp1 + 1);
      const std::string_view outcome_text =
          rest.substr(sp1 + 1, sp2 == std::string_view::npos
                                   ? std::string_view::npos
                                   : sp2 - sp1 - 1);
      const auto outcome = parse_outcome(outcome_text);
      if (!outcome) {
        throw Error(ErrorCode::kParseError,
                    "unknown outcome " + std::string(outcome_text), line_no);
      }
      DiscourseEntry d;
      d.sentence_id = std::string(rest.substr(0, sp1));
      d.outcome = *outcome;
      if (sp2 != std::string_view::npos) d.text = std::string(rest.substr(sp2 + 1));
      store.log_discourse(std::move(d));
      continue;
    }
    if (line.substr(0, 11) == "#discarded ") {
      const auto words = split_words(line.substr(11));
      if (words.size() != 3 || store.discourse_.empty() ||
          store.discourse_.back().sentence_id != words[0]) {
        throw Error(ErrorCode::kParseError, "malformed #discarded", line_no);
      }
      store.discourse_.back().discarded.emplace_back(words[1], words[2]);
      continue;
    }
    if (line.front() == '#') continue;

    const SExpr e = SExprReader(line, line_no).read_all();
    if (is_list_of(e, 3, "isa")) {
      if (!is_atom(e.items[1]) || !is_atom(e.items[2]) ||
          e.items[2].atom != "Norm") {
        throw Error(ErrorCode::kParseError, "expected (isa <id> Norm)", line_no);
      }
      if (store.find_by_id(e.items[1].atom)) {
        throw Error(ErrorCode::kParseError,
                    "duplicate frame " + e.items[1].atom, line_no);
      }
      NormFrame f;
      f.id = e.items[1].atom;
      if (const auto n = numeric_suffix(f.id, "norm")) {
        store.next_frame_ = std::max(store.next_frame_, *n + 1);
      }
      store.frames_.push_back(std::move(f));
    } else if (is_list_of(e, 3, "context") || is_list_of(e, 3, "behavior")) {
      if (!is_atom(e.items[1]) || !is_atom(e.items[2])) {
        throw Error(ErrorCode::kParseError, "expected atoms", line_no);
      }
      NormFrame& f = frame_for(e.items[1].atom, line_no);
      (e.items[0].atom == "context" ? f.context : f.behavior) = e.items[2].atom;
    } else if (is_list_of(e, 4, "evidenceFor")) {
      const SExpr& event = e.items[1];
      if (!is_list_of(event, 3, "PresentationEventFn") ||
          !is_atom(event.items[1]) || !is_atom(event.items[2])) {
        throw Error(ErrorCode::kParseError,
                    "expected (PresentationEventFn <sid> <event-id>)", line_no);
      }
      const SExpr& statements = e.items[2];
      if (!statements.is_list || statements.items.empty()) {
        throw Error(ErrorCode::kParseError, "empty evidence statement set",
                    line_no);
      }
      std::optional<Slot> slot;
      std::string frame_id;
      std::vector<std::string> members;
      for (const SExpr& s : statements.items) {
        if (!s.is_list || s.items.size() != 3 || !is_atom(s.items[0]) ||
            !is_atom(s.items[1]) || !is_atom(s.items[2])) {
          throw Error(ErrorCode::kParseError, "malformed slot statement",
                      line_no);
        }
        const auto this_slot = parse_slot(s.items[0].atom);
        if (!this_slot || (slot && *slot != *this_slot) ||
            (!frame_id.empty() && frame_id != s.items[1].atom)) {
          throw Error(ErrorCode::kParseError, "mixed or unknown slot statements",
                      line_no);
        }
        slot = this_slot;
        frame_id = s.items[1].atom;
        members.push_back(s.items[2].atom);
      }
      double mass = 0.0;
      if (!is_atom(e.items[3]) || !parse_double(e.items[3].atom, &mass)) {
        throw Error(ErrorCode::kParseError, "bad mass", line_no);
      }
      frame_for(frame_id, line_no);
      try {
        store.record_evidence(frame_id, *slot,
                              FocalSet::of(fod_for(*slot), members), mass,
                              event.items[2].atom, event.items[1].atom);
      } catch (const Error& err) {
        throw Error(ErrorCode::kParseError, err.what(), line_no);
      }
    } else {
      throw Error(ErrorCode::kParseError, "unrecognized fact", line_no);
    }
  }

  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& f : store.frames_) {
    if (f.behavior.empty() || f.context.empty()) {
      throw Error(ErrorCode::kParseError,
                  f.id + " lacks a behavior or context");
    }
    if (!keys.insert({f.behavior, f.context}).second) {
      throw Error(ErrorCode::kParseError,
                  "two frames share (" + f.behavior + ", " + f.context + ")");
    }
  }
  std::stable_sort(store.frames_.begin(), store.frames_.end(),
                   [](const NormFrame& a, const NormFrame& b) {
                     return id_less(a.id, b.id, "norm");
                   });
  for (auto& f : store.frames_) {
    for (auto* body : {&f.evaluation_evidence, &f.prevalence_evidence}) {
      std::stable_sort(body->begin(), body->end(),
                       [](const EvidenceRecord& a, const EvidenceRecord& b) {
                         return id_less(a.event_id, b.event_id, "pe");
                       });
    }
  }
  store.dirty_ = false;
  return store;
}

}  // namespace normlearn
