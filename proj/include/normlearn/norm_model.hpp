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

// Norm frames and the belief store.
//
// A norm frame maps a (behavior, context) pair to two slots, evaluation and
// prevalence. Slots hold no value directly: each holds a body of evidence,
// one record per teaching, and slot values are derived by combining that
// evidence at query time.

#ifndef NORMLEARN_NORM_MODEL_HPP_
#define NORMLEARN_NORM_MODEL_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "normlearn/evidence.hpp"
#include "normlearn/ontology.hpp"

namespace normlearn {

inline constexpr double kDefaultTeachingMass = 0.9;

enum class Slot { kEvaluation, kPrevalence };

// First-order statuses come first; Permissible and Omissible are unions.
enum class DeonticModal {
  kObligatory,
  kOptional,
  kImpermissible,
  kPermissible,
  kOmissible,
};

enum class Frequency {
  kContinuously,
  kOften,
  kSometimes,
  kRarely,
  kNever,
  kMoreThanSometimes,
  kLessThanSometimes,
};

using SlotValue = std::variant<DeonticModal, Frequency>;

std::string_view slot_name(Slot slot);
std::optional<Slot> parse_slot(std::string_view text);
std::string_view label(DeonticModal m);
std::string_view label(Frequency f);
std::string_view label(const SlotValue& v);
Slot slot_of(const SlotValue& v);
bool is_first_order(const SlotValue& v);
std::optional<SlotValue> parse_value(Slot slot, std::string_view text);

// The first-order labels a value stands for, e.g. Permissible ->
// {Obligatory, Optional}.
std::vector<std::string> modal_set(DeonticModal m);
std::vector<std::string> frequency_set(Frequency f);

// Θ for each slot holds only the first-order values.
const FramePtr& evaluation_fod();
const FramePtr& prevalence_fod();
const FramePtr& fod_for(Slot slot);
FocalSet element_set(const SlotValue& v);

std::vector<SlotValue> first_order_values(Slot slot);
// Candidate answers, smallest sets first.
std::vector<SlotValue> answer_ladder(Slot slot);

struct EvidenceRecord {
  std::string event_id;
  std::string sentence_id;
  Slot slot;
  FocalSet focal;
  double mass;  // on `focal`; 1 - mass implicitly on Θ

  MassFunction as_mass() const { return simple_support(focal, mass); }
};

struct NormFrame {
  std::string id;
  Concept behavior;
  Concept context;
  std::vector<EvidenceRecord> evaluation_evidence;
  std::vector<EvidenceRecord> prevalence_evidence;

  const std::vector<EvidenceRecord>& evidence(Slot slot) const {
    return slot == Slot::kEvaluation ? evaluation_evidence
                                     : prevalence_evidence;
  }
  std::vector<EvidenceRecord>& evidence(Slot slot) {
    return slot == Slot::kEvaluation ? evaluation_evidence
                                     : prevalence_evidence;
  }
};

enum class Outcome { kLearnedNewFrame, kMergedIntoExisting, kNoNormDetected };

std::string_view outcome_name(Outcome o);
std::optional<Outcome> parse_outcome(std::string_view text);

struct DiscourseEntry {
  std::string sentence_id;
  Outcome outcome;
  std::string text;
  // Extracted but not chosen (behavior, context) readings.
  std::vector<std::pair<Concept, Concept>> discarded;

  bool operator==(const DiscourseEntry&) const = default;
};

struct FrameLookup {
  std::string id;
  bool created;
};

// The agent's beliefs: norm frames keyed by (behavior, context) and the
// discourse log. Single writer; copy it to snapshot for readers.
class BeliefStore {
 public:
  const std::vector<NormFrame>& frames() const { return frames_; }
  const NormFrame* find(std::string_view behavior,
                        std::string_view context) const;
  const NormFrame* find_by_id(std::string_view id) const;
  // Throws kUnknownFrame.
  const NormFrame& frame(std::string_view id) const;

  // Exact key match, otherwise a fresh `norm<N>`. Throws
  // kTypeConstraintViolation when behavior is not an Action or
  // ConfigurationOfAgent, or context not a Location-Underspecified.
  FrameLookup find_or_create_frame(const Concept& behavior,
                                   const Concept& context,
                                   const Ontology& o);

  // Errors: kUnknownFrame, kForeignElement (focal not over the slot's Θ),
  // kInvalidMass (outside (0,1]).
  const EvidenceRecord& record_evidence(std::string_view frame_id, Slot slot,
                                        const FocalSet& focal, double mass,
                                        const std::string& event_id,
                                        const std::string& sentence_id);

  void log_discourse(DiscourseEntry entry);
  const std::vector<DiscourseEntry>& discourse_log() const {
    return discourse_;
  }

  std::string next_sentence_id() const;
  std::string next_event_id() const;
  std::size_t evidence_count() const;

  bool dirty() const { return dirty_; }
  void mark_clean() { dirty_ = false; }

 private:
  friend BeliefStore load_store(std::string_view text);

  NormFrame* find_mutable(std::string_view id);

  std::vector<NormFrame> frames_;
  std::vector<DiscourseEntry> discourse_;
  std::size_t next_frame_ = 1;
  std::size_t next_event_ = 1;
  std::size_t next_sentence_ = 1;
  bool dirty_ = false;
};

// Dempster combination of every record in the slot. Errors: kUnknownFrame,
// kNoEvidence, kTotalConflict.
MassFunction slot_mass(const BeliefStore& store, std::string_view frame_id,
                       Slot slot);
MassFunction slot_mass(const NormFrame& frame, Slot slot);

// First-order values with the highest belief; ties within 1e-9 are all
// returned, in Θ order.
std::vector<SlotValue> most_believed_values(const MassFunction& m, Slot slot);

enum class NormClass { kDescriptiveNorm, kInjunctiveNorm };

// Descriptive when the most-believed prevalence is Often or Continuously;
// injunctive when the most-believed evaluation is Obligatory or
// Impermissible. A tie counts only if every tied value qualifies.
std::set<NormClass> classify(const BeliefStore& store,
                             std::string_view frame_id);

// Text form: one predicate-calculus fact per line, frames by id, records
// by event id, then the discourse log.
std::string save_store(const BeliefStore& store);
// Errors: kParseError with line number.
BeliefStore load_store(std::string_view text);

}  // namespace normlearn

#endif  // NORMLEARN_NORM_MODEL_HPP_
