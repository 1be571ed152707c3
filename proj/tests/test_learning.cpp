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

#include "normlearn/errors.hpp"
#include "normlearn/learning.hpp"
#include "test_support.hpp"

using namespace normlearn;

namespace {

const Ontology& onto() { return testing::bundled_ontology(); }

}  // namespace

TEST_CASE("assimilate creates then merges") {
  BeliefStore s;
  const auto a = assimilate(s, "You may eat on the bus.", onto());
  CHECK(a.outcome == Outcome::kLearnedNewFrame);
  CHECK(a.sentence_id == "s1");
  CHECK(a.frame_id == "norm1");
  REQUIRE(a.evidence.has_value());
  CHECK(a.evidence->event_id == "pe1");
  CHECK(a.evidence->mass == 0.9);
  CHECK(describe(a, s) ==
        "learned norm1 (EatingEvent @ Bus-RoadVehicle): evaluation += "
        "Optional(0.9)");

  const auto b = assimilate(s, "Do not eat on the bus.", onto());
  CHECK(b.outcome == Outcome::kMergedIntoExisting);
  CHECK(b.frame_id == "norm1");
  CHECK(describe(b, s) ==
        "merged norm1 (EatingEvent @ Bus-RoadVehicle): evaluation += "
        "Impermissible(0.9)");

  const auto c = assimilate(s, "Karli ate on the bus.", onto());
  CHECK(c.outcome == Outcome::kNoNormDetected);
  CHECK_FALSE(c.frame_id.has_value());
  CHECK(describe(c, s) == "no norm detected");

  // Descriptive teaching lands in the other slot of the same frame.
  const auto d = assimilate(s, "People rarely eat on the bus.", onto());
  CHECK(d.outcome == Outcome::kMergedIntoExisting);
  CHECK(s.frame("norm1").prevalence_evidence.size() == 1);
  CHECK(s.frame("norm1").evaluation_evidence.size() == 2);

  REQUIRE(s.discourse_log().size() == 4);
  CHECK(s.discourse_log()[2].outcome == Outcome::kNoNormDetected);
  CHECK(s.discourse_log()[2].text == "Karli ate on the bus.");
  CHECK(s.frames().size() == 1);
}

TEST_CASE("teaching mass is configurable and validated") {
  BeliefStore s;
  const auto r = assimilate(s, "Sit in church.", onto(), 0.7);
  CHECK(r.evidence->mass == 0.7);
  CHECK_THROWS_AS(assimilate(s, "Sit in church.", onto(), 1.0), Error);
  CHECK_THROWS_AS(assimilate(s, "Sit in church.", onto(), 0.0), Error);
}

TEST_CASE("choosing among ambiguous readings") {
  BeliefStore s;
  const auto first = assimilate(s, "You can play in the park.", onto());
  CHECK(first.chosen->behavior == "PlayingAGame");
  REQUIRE(s.discourse_log().back().discarded.size() == 1);
  CHECK(s.discourse_log().back().discarded[0] ==
        std::pair<Concept, Concept>{"PlayingMusic", "Park"});

  // An existing frame wins over name order.
  BeliefStore t;
  t.find_or_create_frame("PlayingMusic", "Park", onto());
  CHECK(assimilate(t, "You can play in the park.", onto()).chosen->behavior ==
        "PlayingMusic");

  // A reading with an explicit context wins over the default location.
  NormIntroduction bare;
  bare.kind = NormKind::kInjunctive;
  bare.evaluation = DeonticModal::kOptional;
  bare.behavior = "Dancing";
  bare.context = "Location-Underspecified";
  NormIntroduction placed = bare;
  placed.behavior = "TalkingEvent";
  placed.context = "Park";
  const std::vector<NormIntroduction> both = {bare, placed};
  CHECK(choose(both, BeliefStore{}).behavior == "TalkingEvent");
}

TEST_CASE("training twice doubles the evidence") {
  const std::vector<std::string> sentences = {"You may eat on the bus.",
                                              "People often cry at funerals.",
                                              "Karli ate."};
  BeliefStore s;
  const auto first = train(s, sentences, onto());
  CHECK(first.size() == 3);
  CHECK(s.evidence_count() == 2);
  train(s, sentences, onto());
  CHECK(s.evidence_count() == 4);
  CHECK(s.frames().size() == 2);
  CHECK(s.discourse_log().size() == 6);
  CHECK(s.discourse_log().back().sentence_id == "s6");
}

TEST_CASE("bundled positives give one frame per distinct key") {
  BeliefStore s;
  const auto sentences = positive_sentences(testing::bundled_corpus());
  std::set<std::pair<Concept, Concept>> keys;
  for (const auto& r : train(s, sentences, onto())) {
    REQUIRE(r.outcome != Outcome::kNoNormDetected);
    keys.insert({r.chosen->behavior, r.chosen->context});
  }
  CHECK(s.frames().size() == keys.size());
  CHECK(s.evidence_count() == sentences.size());
}
