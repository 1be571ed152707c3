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

#include "normlearn/learning.hpp"

#include <iostream>
#include <tuple>

#include "normlearn/errors.hpp"
#include "normlearn/text_util.hpp"

namespace normlearn {

NormIntroduction choose(std::span<const NormIntroduction> introductions,
                        const BeliefStore& store) {
  if (introductions.empty()) {
    throw Error(ErrorCode::kNoEvidence, "choose() needs at least one reading");
  }
  auto rank = [&](const NormIntroduction& n) {
    const bool existing = store.find(n.behavior, n.context) != nullptr;
    const bool explicit_context = n.context != kLocationRoot;
    // Lower tuples win.
    return std::make_tuple(!existing, !explicit_context, n.behavior, n.context);
  };
  const NormIntroduction* best = &introductions.front();
  for (const auto& n : introductions) {
    if (rank(n) < rank(*best)) best = &n;
  }
  return *best;
}

AssimilationResult assimilate(BeliefStore& store, std::string_view text,
                              const Ontology& o, double teaching_mass) {
  if (!(teaching_mass > 0.0 && teaching_mass < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                "teaching mass must lie in (0,1), got " +
                    format_double(teaching_mass));
  }
  AssimilationResult result;
  result.sentence_id = store.next_sentence_id();
  const std::string clean = single_line(text);

  DiscourseEntry entry{result.sentence_id, Outcome::kNoNormDetected, clean, {}};
  const auto introductions = extract_norms(clean, o, result.sentence_id);
  if (introductions.empty()) {
    result.outcome = Outcome::kNoNormDetected;
    store.log_discourse(std::move(entry));
    return result;
  }

  const NormIntroduction chosen = choose(introductions, store);
  try {
    const FrameLookup lookup =
        store.find_or_create_frame(chosen.behavior, chosen.context, o);
    const EvidenceRecord& record = store.record_evidence(
        lookup.id, chosen.slot(), element_set(chosen.value()), teaching_mass,
        store.next_event_id(), result.sentence_id);
    result.outcome = lookup.created ? Outcome::kLearnedNewFrame
                                    : Outcome::kMergedIntoExisting;
    result.frame_id = lookup.id;
    result.evidence = record;
    result.chosen = chosen;
  } catch (const Error& err) {
    std::clog << "normlearn: " << result.sentence_id
              << " not assimilated: " << err.what() << '\n';
    result.outcome = Outcome::kNoNormDetected;
  }

  entry.outcome = result.outcome;
  for (const auto& n : introductions) {
    if (n.behavior != chosen.behavior || n.context != chosen.context) {
      entry.discarded.emplace_back(n.behavior, n.context);
    }
  }
  store.log_discourse(std::move(entry));
  return result;
}

std::vector<AssimilationResult> train(BeliefStore& store,
                                      std::span<const std::string> sentences,
                                      const Ontology& o, double teaching_mass) {
  std::vector<AssimilationResult> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    out.push_back(assimilate(store, s, o, teaching_mass));
  }
  return out;
}

std::string describe(const AssimilationResult& r, const BeliefStore& store) {
  if (r.outcome == Outcome::kNoNormDetected || !r.frame_id || !r.evidence) {
    return "no norm detected";
  }
  const NormFrame& f = store.frame(*r.frame_id);
  std::string values;
  for (const auto& m : r.evidence->focal.members()) {
    if (!values.empty()) values += '|';
    values += m;
  }
  return std::string(r.outcome == Outcome::kLearnedNewFrame ? "learned "
                                                            : "merged ") +
         f.id + " (" + f.behavior + " @ " + f.context +
         "): " + std::string(slot_name(r.evidence->slot)) + " += " + values +
         "(" + format_double(r.evidence->mass) + ")";
}

}  // namespace normlearn
