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

// Corpus handling and the two evaluation experiments.
//
// Corpus files are UTF-8 TSV, one entry per line:
//
//   label <TAB> sentence [<TAB> query <TAB> expected]
//
// label is pos-injunctive, pos-descriptive or negative. A positive whose
// norm is covered by another row's query (conflicting teachings share one
// query) writes `(merged)` as its query and no expected answer. A negative
// may carry `near-miss` in the third column to mark a sentence that is
// expected to fool the extraction rules. Lines starting with `#` are
// comments.

#ifndef NORMLEARN_EVAL_HARNESS_HPP_
#define NORMLEARN_EVAL_HARNESS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normlearn/norm_model.hpp"
#include "normlearn/ontology.hpp"
#include "normlearn/query.hpp"

namespace normlearn {

enum class CorpusLabel { kPosInjunctive, kPosDescriptive, kNegative };

std::string_view corpus_label_name(CorpusLabel l);

inline constexpr std::string_view kMergedQueryMarker = "(merged)";
inline constexpr std::string_view kNearMissMarker = "near-miss";

struct CorpusEntry {
  CorpusLabel label;
  std::string sentence;
  std::optional<std::string> query;
  std::optional<std::string> expected;
  bool merged_query = false;
  bool near_miss = false;
  std::size_t line = 0;

  bool positive() const { return label != CorpusLabel::kNegative; }
  bool has_query() const { return query.has_value() && !merged_query; }
};

// Errors: kParseError(line), kMissingQueryForPositive, kDuplicateSentence.
std::vector<CorpusEntry> load_corpus(std::string_view text);

std::vector<std::string> positive_sentences(
    std::span<const CorpusEntry> corpus);

struct QueryOutcome {
  std::string query;
  std::string expected;
  std::string answer;
  bool correct = false;
};

struct ExperimentReport {
  // Experiment 1: a positive is a true positive when at least one rule
  // fires; a negative is a true negative when none does.
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // No rule fired anywhere: precision is reported as 1.0.
  bool zero_positive = false;
  std::vector<std::string> false_positives;
  std::vector<std::string> false_negatives;

  // Experiment 2.
  std::size_t query_total = 0;
  std::size_t query_correct = 0;
  double accuracy = 0.0;
  std::vector<QueryOutcome> queries;
};

// Fills precision/recall/f1 from the four counts.
void compute_extraction_metrics(ExperimentReport* report);

ExperimentReport run_experiment1(std::span<const CorpusEntry> corpus,
                                 const Ontology& o);

// Trains a fresh store on every positive, in corpus order, then answers
// every annotated query. Unparsed queries count as incorrect.
ExperimentReport run_experiment2(
    std::span<const CorpusEntry> corpus, const Ontology& o,
    double teaching_mass = kDefaultTeachingMass,
    double threshold = kDefaultBeliefThreshold,
    BeliefStore* trained = nullptr);

// Both experiments in one report.
ExperimentReport run_evaluation(std::span<const CorpusEntry> corpus,
                                const Ontology& o,
                                double teaching_mass = kDefaultTeachingMass,
                                double threshold = kDefaultBeliefThreshold);

std::string render_report_text(const ExperimentReport& r);
std::string render_report_json(const ExperimentReport& r);

// Teaches `sentences` to a fresh store and records the interval of `value`
// for (behavior, context) after each one that leaves evidence in the slot.
std::vector<TrajectoryPoint> emit_trajectory(
    std::span<const std::string> sentences, const Concept& behavior,
    const Concept& context, Slot slot, const SlotValue& value,
    const Ontology& o, double teaching_mass = kDefaultTeachingMass);

// CSV with header `step,belief,plausibility`.
std::string trajectory_csv(std::span<const TrajectoryPoint> points);

}  // namespace normlearn

#endif  // NORMLEARN_EVAL_HARNESS_HPP_
