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

#ifndef NORMLEARN_LEARNING_HPP_
#define NORMLEARN_LEARNING_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normlearn/nl_pipeline.hpp"
#include "normlearn/norm_model.hpp"
#include "normlearn/ontology.hpp"

namespace normlearn {

struct AssimilationResult {
  std::string sentence_id;
  Outcome outcome;
  std::optional<std::string> frame_id;  // set iff a norm was detected
  std::optional<EvidenceRecord> evidence;
  std::optional<NormIntroduction> chosen;
};

// Picks one reading out of an ambiguous extraction: a reading whose frame
// already exists, then one with an explicit context, then the smallest
// (behavior, context) by name.
NormIntroduction choose(std::span<const NormIntroduction> introductions,
                        const BeliefStore& store);

// Extracts norms from one teaching and records `teaching_mass` of evidence
// for the chosen reading. Every call appends one discourse log entry.
AssimilationResult assimilate(BeliefStore& store, std::string_view text,
                              const Ontology& o,
                              double teaching_mass = kDefaultTeachingMass);

std::vector<AssimilationResult> train(
    BeliefStore& store, std::span<const std::string> sentences,
    const Ontology& o, double teaching_mass = kDefaultTeachingMass);

// One-line summary, e.g.
// "learned norm1 (EatingEvent @ Bus-RoadVehicle): evaluation += Optional(0.9)".
std::string describe(const AssimilationResult& r, const BeliefStore& store);

}  // namespace normlearn

#endif  // NORMLEARN_LEARNING_HPP_
