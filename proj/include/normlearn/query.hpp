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

// Belief queries over a store snapshot. A value is believed when the centre
// of its uncertainty interval, (Bel + Pl) / 2, reaches the threshold.

#ifndef NORMLEARN_QUERY_HPP_
#define NORMLEARN_QUERY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normlearn/evidence.hpp"
#include "normlearn/nl_pipeline.hpp"
#include "normlearn/norm_model.hpp"

namespace normlearn {

inline constexpr double kDefaultBeliefThreshold = 0.9;

struct BeliefAnswer {
  SlotValue value;
  UncertaintyInterval interval;
  bool believed = false;
  double center = 0.0;
};

BeliefAnswer make_answer(const SlotValue& value, const UncertaintyInterval& i,
                         double threshold);

// [Bel, Pl] of the value's element set. Errors: kUnknownFrame when no frame
// has this (behavior, context), kNoEvidence for an empty slot,
// kForeignElement when the value belongs to the other slot.
UncertaintyInterval confidence_in(const BeliefStore& store, Slot slot,
                                  std::string_view behavior,
                                  std::string_view context,
                                  const SlotValue& value);

struct BeliefBinding {
  std::string frame_id;
  Concept behavior;
  Concept context;
  BeliefAnswer answer;
};

// Frames matching the bound arguments whose slot believes `value`.
std::vector<BeliefBinding> believes(
    const BeliefStore& store, Slot slot, const std::optional<Concept>& behavior,
    const std::optional<Concept>& context, const SlotValue& value,
    double threshold = kDefaultBeliefThreshold);

// First-order values with maximal belief; ties are all returned.
std::vector<SlotValue> most_believed(const BeliefStore& store, Slot slot,
                                     std::string_view behavior,
                                     std::string_view context);

struct AnswerDetail {
  std::string label;  // a value label, "Uncertain(...)" or "Unknown"
  std::optional<std::string> frame_id;
  std::optional<SlotValue> value;
  std::optional<UncertaintyInterval> interval;
  bool believed = false;
};

AnswerDetail answer_detail(const BeliefStore& store, const QueryForm& q,
                           double threshold = kDefaultBeliefThreshold);
std::string answer(const BeliefStore& store, const QueryForm& q,
                   double threshold = kDefaultBeliefThreshold);

struct TrajectoryPoint {
  std::size_t step;
  double belief;
  double plausibility;
};

// Interval of `value` after each record of the frame's slot, in record order.
std::vector<TrajectoryPoint> evidence_trajectory(const NormFrame& frame,
                                                 Slot slot,
                                                 const SlotValue& value);

}  // namespace normlearn

#endif  // NORMLEARN_QUERY_HPP_
