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

#include "normlearn/query.hpp"

#include "normlearn/errors.hpp"

namespace normlearn {

BeliefAnswer make_answer(const SlotValue& value, const UncertaintyInterval& i,
                         double threshold) {
  BeliefAnswer a{value, i, false, i.center()};
  a.believed = a.center >= threshold;
  return a;
}

namespace {

const NormFrame& require_frame(const BeliefStore& store,
                               std::string_view behavior,
                               std::string_view context) {
  const NormFrame* f = store.find(behavior, context);
  if (!f) {
    throw Error(ErrorCode::kUnknownFrame, "no norm for (" +
                                              std::string(behavior) + ", " +
                                              std::string(context) + ")");
  }
  return *f;
}

void check_slot(Slot slot, const SlotValue& value) {
  if (slot_of(value) != slot) {
    throw Error(ErrorCode::kForeignElement,
                std::string(label(value)) + " is not a " +
                    std::string(slot_name(slot)) + " value");
  }
}

}  // namespace

UncertaintyInterval confidence_in(const BeliefStore& store, Slot slot,
                                  std::string_view behavior,
                                  std::string_view context,
                                  const SlotValue& value) {
  check_slot(slot, value);
  const NormFrame& f = require_frame(store, behavior, context);
  return interval(slot_mass(f, slot), element_set(value));
}

std::vector<BeliefBinding> believes(const BeliefStore& store, Slot slot,
                                    const std::optional<Concept>& behavior,
                                    const std::optional<Concept>& context,
                                    const SlotValue& value, double threshold) {
  check_slot(slot, value);
  std::vector<BeliefBinding> out;
  for (const auto& f : store.frames()) {
    if (behavior && f.behavior != *behavior) continue;
    if (context && f.context != *context) continue;
    if (f.evidence(slot).empty()) continue;
    const auto a = make_answer(
        value, interval(slot_mass(f, slot), element_set(value)), threshold);
    if (a.believed) out.push_back({f.id, f.behavior, f.context, a});
  }
  return out;
}

std::vector<SlotValue> most_believed(const BeliefStore& store, Slot slot,
                                     std::string_view behavior,
                                     std::string_view context) {
  const NormFrame& f = require_frame(store, behavior, context);
  return most_believed_values(slot_mass(f, slot), slot);
}

AnswerDetail answer_detail(const BeliefStore& store, const QueryForm& q,
                           double threshold) {
  AnswerDetail out;
  const NormFrame* f = nullptr;
  for (const auto& behavior : q.behavior_choices) {
    if ((f = store.find(behavior, q.context))) break;
  }
  if (!f) f = store.find(q.behavior, q.context);
  const Slot slot = q.slot();
  if (!f || f->evidence(slot).empty()) {
    out.label = "Unknown";
    if (f) out.frame_id = f->id;
    return out;
  }
  out.frame_id = f->id;
  const MassFunction m = slot_mass(*f, slot);
  for (const auto& v : answer_ladder(slot)) {
    const auto a = make_answer(v, interval(m, element_set(v)), threshold);
    if (a.believed) {
      out.label = std::string(label(v));
      out.value = v;
      out.interval = a.interval;
      out.believed = true;
      return out;
    }
  }
  std::string tied;
  for (const auto& v : most_believed_values(m, slot)) {
    if (!tied.empty()) tied += ",";
    tied += label(v);
  }
  out.label = "Uncertain(" + tied + ")";
  return out;
}

std::string answer(const BeliefStore& store, const QueryForm& q,
                   double threshold) {
  return answer_detail(store, q, threshold).label;
}

std::vector<TrajectoryPoint> evidence_trajectory(const NormFrame& frame,
                                                 Slot slot,
                                                 const SlotValue& value) {
  check_slot(slot, value);
  const FocalSet target = element_set(value);
  std::vector<TrajectoryPoint> out;
  std::optional<MassFunction> acc;
  for (const auto& record : frame.evidence(slot)) {
    acc = acc ? combine(*acc, record.as_mass()) : record.as_mass();
    const auto i = interval(*acc, target);
    out.push_back({out.size() + 1, i.lower, i.upper});
  }
  return out;
}

}  // namespace normlearn
