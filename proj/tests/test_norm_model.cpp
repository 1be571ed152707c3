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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ds_oracle.hpp"
#include "normlearn/errors.hpp"
#include "normlearn/norm_model.hpp"
#include "test_support.hpp"

using namespace normlearn;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kIoError;
}

FocalSet single(const SlotValue& v) { return element_set(v); }

// A store with one frame and the given evaluation teachings.
BeliefStore with_evaluations(std::initializer_list<DeonticModal> values) {
  BeliefStore s;
  const auto id =
      s.find_or_create_frame("EatingEvent", "KitchenRoom", testing::bundled_ontology())
          .id;
  for (auto v : values) {
    s.record_evidence(id, Slot::kEvaluation, single(v), 0.9, s.next_event_id(),
                      "s1");
  }
  return s;
}

}  // namespace

TEST_CASE("slot values and element sets") {
  CHECK(label(DeonticModal::kPermissible) == "Permissible");
  CHECK(label(Frequency::kLessThanSometimes) == "LessThanSometimes");
  CHECK(modal_set(DeonticModal::kPermissible) ==
        std::vector<std::string>{"Obligatory", "Optional"});
  CHECK(modal_set(DeonticModal::kOmissible) ==
        std::vector<std::string>{"Optional", "Impermissible"});
  CHECK(frequency_set(Frequency::kMoreThanSometimes) ==
        std::vector<std::string>{"Continuously", "Often"});
  CHECK(frequency_set(Frequency::kLessThanSometimes) ==
        std::vector<std::string>{"Rarely", "Never"});
  CHECK(evaluation_fod()->size() == 3);
  CHECK(prevalence_fod()->size() == 5);
  CHECK(element_set(DeonticModal::kPermissible).cardinality() == 2);
  CHECK(slot_of(Frequency::kNever) == Slot::kPrevalence);
  CHECK(is_first_order(DeonticModal::kImpermissible));
  CHECK_FALSE(is_first_order(DeonticModal::kOmissible));
  CHECK(parse_value(Slot::kEvaluation, "Omissible") ==
        SlotValue(DeonticModal::kOmissible));
  CHECK_FALSE(parse_value(Slot::kEvaluation, "Often").has_value());
  CHECK(answer_ladder(Slot::kEvaluation).size() == 5);
  CHECK(answer_ladder(Slot::kPrevalence).back() ==
        SlotValue(Frequency::kLessThanSometimes));
}

TEST_CASE("frames are keyed by behavior and context") {
  const auto& o = testing::bundled_ontology();
  BeliefStore s;
  const auto a = s.find_or_create_frame("EatingEvent", "Bus-RoadVehicle", o);
  CHECK(a.created);
  CHECK(a.id == "norm1");
  const auto b = s.find_or_create_frame("EatingEvent", "Bus-RoadVehicle", o);
  CHECK_FALSE(b.created);
  CHECK(b.id == "norm1");
  CHECK(s.find_or_create_frame("EatingEvent", "KitchenRoom", o).id == "norm2");
  CHECK(code_of([&] { s.find_or_create_frame("KitchenRoom", "KitchenRoom", o); }) ==
        ErrorCode::kTypeConstraintViolation);
  CHECK(code_of([&] {
          s.find_or_create_frame("EatingEvent", "EatingEvent", o);
        }) == ErrorCode::kTypeConstraintViolation);
  CHECK(code_of([&] {
          s.find_or_create_frame("FluidFlow-Translation", "Park", o);
        }) == ErrorCode::kTypeConstraintViolation);
}

TEST_CASE("record_evidence validation") {
  auto s = with_evaluations({});
  CHECK(code_of([&] {
          s.record_evidence("norm9", Slot::kEvaluation,
                            single(DeonticModal::kOptional), 0.9, "pe1", "s1");
        }) == ErrorCode::kUnknownFrame);
  CHECK(code_of([&] {
          s.record_evidence("norm1", Slot::kEvaluation,
                            single(Frequency::kOften), 0.9, "pe1", "s1");
        }) == ErrorCode::kForeignElement);
  CHECK(code_of([&] {
          s.record_evidence("norm1", Slot::kEvaluation,
                            single(DeonticModal::kOptional), 0.0, "pe1", "s1");
        }) == ErrorCode::kInvalidMass);
  CHECK(code_of([&] { slot_mass(s, "norm1", Slot::kEvaluation); }) ==
        ErrorCode::kNoEvidence);
  CHECK(s.next_event_id() == "pe1");
  s.record_evidence("norm1", Slot::kEvaluation, single(DeonticModal::kOptional),
                    0.9, "pe1", "s1");
  CHECK(s.next_event_id() == "pe2");
  CHECK(s.dirty());
}

TEST_CASE("slot mass matches the oracle") {
  const auto s = with_evaluations({DeonticModal::kOptional,
                                   DeonticModal::kImpermissible,
                                   DeonticModal::kObligatory});
  const oracle::Set theta{"Obligatory", "Optional", "Impermissible"};
  const auto want = oracle::combine_all<double>(
      {oracle::support<double>(theta, {"Optional"}, 0.9),
       oracle::support<double>(theta, {"Impermissible"}, 0.9),
       oracle::support<double>(theta, {"Obligatory"}, 0.9)});
  const auto got = testing::to_oracle(slot_mass(s, "norm1", Slot::kEvaluation));
  REQUIRE(got.size() == want.size());
  for (const auto& [set, v] : want) CHECK(got.at(set) == doctest::Approx(v));
}

TEST_CASE("most believed values and ties") {
  const auto one = with_evaluations({DeonticModal::kObligatory});
  CHECK(most_believed_values(slot_mass(one, "norm1", Slot::kEvaluation),
                             Slot::kEvaluation) ==
        std::vector<SlotValue>{DeonticModal::kObligatory});
  const auto tie =
      with_evaluations({DeonticModal::kOptional, DeonticModal::kObligatory});
  CHECK(most_believed_values(slot_mass(tie, "norm1", Slot::kEvaluation),
                             Slot::kEvaluation) ==
        std::vector<SlotValue>{DeonticModal::kObligatory,
                               DeonticModal::kOptional});
}

TEST_CASE("classification") {
  CHECK(classify(with_evaluations({DeonticModal::kImpermissible}), "norm1") ==
        std::set<NormClass>{NormClass::kInjunctiveNorm});
  CHECK(classify(with_evaluations({DeonticModal::kOptional}), "norm1").empty());
  // A tie only counts when every tied value qualifies.
  CHECK(classify(with_evaluations({DeonticModal::kObligatory,
                                   DeonticModal::kImpermissible}),
                 "norm1") == std::set<NormClass>{NormClass::kInjunctiveNorm});
  CHECK(classify(with_evaluations(
                     {DeonticModal::kObligatory, DeonticModal::kOptional}),
                 "norm1")
            .empty());

  auto s = with_evaluations({DeonticModal::kObligatory});
  s.record_evidence("norm1", Slot::kPrevalence, single(Frequency::kOften), 0.9,
                    s.next_event_id(), "s2");
  CHECK(classify(s, "norm1") == std::set<NormClass>{NormClass::kInjunctiveNorm,
                                                    NormClass::kDescriptiveNorm});
  auto rare = with_evaluations({});
  rare.record_evidence("norm1", Slot::kPrevalence, single(Frequency::kRarely),
                       0.9, "pe1", "s1");
  CHECK(classify(rare, "norm1").empty());
}

TEST_CASE("store round trip") {
  const auto& o = testing::bundled_ontology();
  BeliefStore s;
  const auto a = s.find_or_create_frame("EatingEvent", "Bus-RoadVehicle", o).id;
  const auto b = s.find_or_create_frame("TalkingEvent", "Elevator", o).id;
  s.record_evidence(a, Slot::kEvaluation, single(DeonticModal::kOptional), 0.9,
                    "pe1", "s1");
  s.record_evidence(b, Slot::kPrevalence, single(Frequency::kRarely), 0.9,
                    "pe2", "s2");
  // Set-valued evidence has no language entry path but must persist.
  s.record_evidence(a, Slot::kEvaluation,
                    element_set(DeonticModal::kPermissible), 0.6, "pe3", "s3");
  s.log_discourse({"s1", Outcome::kLearnedNewFrame, "You may eat on the bus.", {}});
  s.log_discourse({"s2", Outcome::kLearnedNewFrame,
                   "People rarely talk in elevators.",
                   {{"PlayingMusic", "Elevator"}}});
  s.log_discourse({"s4", Outcome::kNoNormDetected, "Karli ate.", {}});

  const std::string text = save_store(s);
  CHECK(text.find("(evidenceFor (PresentationEventFn s3 pe3) "
                  "((evaluation norm1 Obligatory) (evaluation norm1 Optional)) "
                  "0.6)") != std::string::npos);
  const BeliefStore back = load_store(text);
  CHECK(save_store(back) == text);
  CHECK(back.discourse_log() == s.discourse_log());
  CHECK(back.next_event_id() == "pe4");
  CHECK(back.next_sentence_id() == "s5");
  CHECK(back.frame("norm1").evaluation_evidence.size() == 2);
  CHECK(back.frame("norm1").evaluation_evidence[1].focal ==
        element_set(DeonticModal::kPermissible));
}

TEST_CASE("store load errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      load_store(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParseError);
      return e.line();
    }
    FAIL("expected a parse error");
    return std::size_t{0};
  };
  const std::string head = "# normlearn belief store v1\n";
  CHECK(line_of("garbage\n") == 1);
  CHECK(line_of(head + "(isa norm1 Norm)\n(context norm1 KitchenRoom\n") == 3);
  CHECK(line_of(head + "(behavior norm7 TalkingEvent)\n") == 2);
  CHECK(line_of(head + "(isa norm1 Norm)\n(context norm1 KitchenRoom)\n"
                       "(behavior norm1 EatingEvent)\n"
                       "(evidenceFor (PresentationEventFn s1 pe1) "
                       "((evaluation norm1 Often)) 0.9)\n") == 5);
  CHECK(line_of(head + "#discourse s1 pondered hello\n") == 2);
}
