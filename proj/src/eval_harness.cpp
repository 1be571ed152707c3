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

#include "normlearn/eval_harness.hpp"

#include <set>
#include <sstream>

#include "json.hpp"
#include "normlearn/errors.hpp"
#include "normlearn/learning.hpp"
#include "normlearn/nl_pipeline.hpp"
#include "normlearn/text_util.hpp"

namespace normlearn {

std::string_view corpus_label_name(CorpusLabel l) {
  switch (l) {
    case CorpusLabel::kPosInjunctive: return "pos-injunctive";
    case CorpusLabel::kPosDescriptive: return "pos-descriptive";
    case CorpusLabel::kNegative: return "negative";
  }
  return "?";
}

std::vector<CorpusEntry> load_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  for (const auto& raw : split_lines(text)) {
    ++line_no;
    if (trim(raw).empty() || trim(raw).front() == '#') continue;
    std::vector<std::string> cols;
    for (const auto& c : split_on(raw, '\t')) cols.emplace_back(trim(c));
    while (!cols.empty() && cols.back().empty()) cols.pop_back();

    CorpusEntry e;
    e.line = line_no;
    if (cols[0] == "pos-injunctive") {
      e.label = CorpusLabel::kPosInjunctive;
    } else if (cols[0] == "pos-descriptive") {
      e.label = CorpusLabel::kPosDescriptive;
    } else if (cols[0] == "negative") {
      e.label = CorpusLabel::kNegative;
    } else {
      throw Error(ErrorCode::kParseError, "unknown label `" + cols[0] + "`",
                  line_no);
    }
    if (cols.size() < 2) {
      throw Error(ErrorCode::kParseError, "missing sentence", line_no);
    }
    e.sentence = cols[1];

    if (!e.positive()) {
      if (cols.size() > 3 || (cols.size() == 3 && cols[2] != kNearMissMarker)) {
        throw Error(ErrorCode::kParseError,
                    "negatives carry no query or expected answer", line_no);
      }
      e.near_miss = cols.size() == 3;
    } else {
      if (cols.size() < 3) {
        throw Error(ErrorCode::kMissingQueryForPositive, e.sentence, line_no);
      }
      e.query = cols[2];
      if (cols[2] == kMergedQueryMarker) {
        e.merged_query = true;
        if (cols.size() > 3) {
          throw Error(ErrorCode::kParseError,
                      "a merged row carries no expected answer", line_no);
        }
      } else {
        if (cols.size() != 4) {
          throw Error(ErrorCode::kParseError,
                      "positive rows need query and expected answer", line_no);
        }
        e.expected = cols[3];
      }
    }
    if (!seen.insert(e.sentence).second) {
      throw Error(ErrorCode::kDuplicateSentence, e.sentence, line_no);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> positive_sentences(
    std::span<const CorpusEntry> corpus) {
  std::vector<std::string> out;
  for (const auto& e : corpus) {
    if (e.positive()) out.push_back(e.sentence);
  }
  return out;
}

void compute_extraction_metrics(ExperimentReport* r) {
  const std::size_t fired = r->tp + r->fp;
  r->zero_positive = fired == 0;
  r->precision = fired == 0 ? 1.0 : static_cast<double>(r->tp) / fired;
  const std::size_t positives = r->tp + r->fn;
  r->recall = positives == 0 ? 1.0 : static_cast<double>(r->tp) / positives;
  const double sum = r->precision + r->recall;
  r->f1 = sum > 0.0 ? 2.0 * r->precision * r->recall / sum : 0.0;
}

ExperimentReport run_experiment1(std::span<const CorpusEntry> corpus,
                                 const Ontology& o) {
  ExperimentReport r;
  for (const auto& e : corpus) {
    const bool fired = !extract_norms(e.sentence, o).empty();
    if (e.positive()) {
      if (fired) {
        ++r.tp;
      } else {
        ++r.fn;
        r.false_negatives.push_back(e.sentence);
      }
    } else if (fired) {
      ++r.fp;
      r.false_positives.push_back(e.sentence);
    } else {
      ++r.tn;
    }
  }
  compute_extraction_metrics(&r);
  return r;
}

ExperimentReport run_experiment2(std::span<const CorpusEntry> corpus,
                                 const Ontology& o, double teaching_mass,
                                 double threshold, BeliefStore* trained) {
  ExperimentReport r;
  BeliefStore store;
  const auto sentences = positive_sentences(corpus);
  train(store, sentences, o, teaching_mass);

  for (const auto& e : corpus) {
    if (!e.positive() || !e.has_query()) continue;
    QueryOutcome q{*e.query, e.expected.value_or(""), "", false};
    if (const auto form = parse_query(*e.query, o)) {
      q.answer = answer(store, *form, threshold);
    } else {
      q.answer = "UnparsedQuery";
    }
    q.correct = q.answer == q.expected;
    ++r.query_total;
    if (q.correct) ++r.query_correct;
    r.queries.push_back(std::move(q));
  }
  r.accuracy = r.query_total == 0
                   ? 1.0
                   : static_cast<double>(r.query_correct) / r.query_total;
  if (trained) *trained = std::move(store);
  return r;
}

ExperimentReport run_evaluation(std::span<const CorpusEntry> corpus,
                                const Ontology& o, double teaching_mass,
                                double threshold) {
  ExperimentReport r = run_experiment1(corpus, o);
  ExperimentReport q = run_experiment2(corpus, o, teaching_mass, threshold);
  r.query_total = q.query_total;
  r.query_correct = q.query_correct;
  r.accuracy = q.accuracy;
  r.queries = std::move(q.queries);
  return r;
}

std::string render_report_text(const ExperimentReport& r) {
  std::ostringstream out;
  out << "Experiment 1: norm extraction\n"
      << "  tp=" << r.tp << " fp=" << r.fp << " tn=" << r.tn << " fn=" << r.fn
      << '\n'
      << "  precision=" << format_4(r.precision)
      << (r.zero_positive ? " (no rule fired)" : "") << '\n'
      << "  recall=" << format_4(r.recall) << '\n'
      << "  f1=" << format_4(r.f1) << '\n';
  for (const auto& s : r.false_positives) out << "  false positive: " << s << '\n';
  for (const auto& s : r.false_negatives) out << "  false negative: " << s << '\n';
  out << "Experiment 2: belief queries\n"
      << "  correct=" << r.query_correct << '/' << r.query_total
      << " accuracy=" << format_4(r.accuracy) << '\n';
  for (const auto& q : r.queries) {
    if (!q.correct) {
      out << "  wrong: " << q.query << " expected " << q.expected << " got "
          << q.answer << '\n';
    }
  }
  return out.str();
}

std::string render_report_json(const ExperimentReport& r) {
  nlohmann::json j;
  j["tp"] = r.tp;
  j["fp"] = r.fp;
  j["tn"] = r.tn;
  j["fn"] = r.fn;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["zero_positive"] = r.zero_positive;
  j["false_positives"] = r.false_positives;
  j["false_negatives"] = r.false_negatives;
  j["query_total"] = r.query_total;
  j["query_correct"] = r.query_correct;
  j["accuracy"] = r.accuracy;
  auto& qs = j["queries"] = nlohmann::json::array();
  for (const auto& q : r.queries) {
    qs.push_back({{"query", q.query},
                  {"expected", q.expected},
                  {"answer", q.answer},
                  {"correct", q.correct}});
  }
  return j.dump(2) + "\n";
}

std::vector<TrajectoryPoint> emit_trajectory(
    std::span<const std::string> sentences, const Concept& behavior,
    const Concept& context, Slot slot, const SlotValue& value,
    const Ontology& o, double teaching_mass) {
  BeliefStore store;
  const FocalSet target = element_set(value);
  std::vector<TrajectoryPoint> out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    assimilate(store, sentences[i], o, teaching_mass);
    const NormFrame* f = store.find(behavior, context);
    if (!f || f->evidence(slot).empty()) continue;
    const auto iv = interval(slot_mass(*f, slot), target);
    out.push_back({i + 1, iv.lower, iv.upper});
  }
  return out;
}

std::string trajectory_csv(std::span<const TrajectoryPoint> points) {
  std::string out = "step,belief,plausibility\n";
  for (const auto& p : points) {
    out += std::to_string(p.step) + "," + format_double(p.belief) + "," +
           format_double(p.plausibility) + "\n";
  }
  return out;
}

}  // namespace normlearn
