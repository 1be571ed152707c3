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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any fails. Expected values come from the brute-force oracle
// in ds_oracle.hpp or from hand-worked examples, never from the library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ds_oracle.hpp"
#include "normlearn/cli.hpp"
#include "normlearn/eval_harness.hpp"
#include "normlearn/learning.hpp"
#include "normlearn/query.hpp"
#include "normlearn/text_util.hpp"
#include "test_support.hpp"

using namespace normlearn;
using oracle::Rational;
namespace fs = std::filesystem;

namespace {

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report(const std::string& summary) const {
    std::printf("%s %d %s: %s\n", ok_ ? "PASS" : "FAIL", number_,
                title_.c_str(), summary.c_str());
    for (const auto& f : failures_) std::printf("    failed: %s\n", f.c_str());
    for (const auto& n : notes_) std::printf("    info: %s\n", n.c_str());
    return ok_;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

const Ontology& onto() { return testing::bundled_ontology(); }

const std::vector<std::string> kBus = {
    "You may eat on the bus.", "You should not eat on the bus.",
    "Do not eat on the bus.", "You should eat on the bus.",
    "You can eat on the bus."};
const std::vector<const char*> kBusValues = {
    "Optional", "Impermissible", "Impermissible", "Obligatory", "Optional"};
const oracle::Set kEvalTheta{"Obligatory", "Optional", "Impermissible"};

oracle::Mass<Rational> bus_oracle(std::size_t steps) {
  std::vector<oracle::Mass<Rational>> ms;
  for (std::size_t i = 0; i < steps; ++i) {
    ms.push_back(oracle::support<Rational>(kEvalTheta, {kBusValues[i]},
                                           Rational(9, 10)));
  }
  return oracle::combine_all(ms);
}

// --- 1 ----------------------------------------------------------------------

bool criterion1() {
  Criterion c(1, "DS oracle equivalence");
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1000);
  double worst = 0.0;
  std::size_t subsets_checked = 0;
  for (int n = 0; n < 1000; ++n) {
    const auto rc = testing::random_case(rng);
    std::vector<MassFunction> lib;
    for (const auto& s : rc.sources) lib.push_back(testing::to_library(rc.frame, s));
    const MassFunction all = combine_all(lib);
    MassFunction pairwise = lib[0];
    for (std::size_t i = 1; i < lib.size(); ++i) pairwise = combine(pairwise, lib[i]);
    const auto want = oracle::combine_all(rc.sources);
    const auto got_all = testing::to_oracle(all);
    const auto got_pair = testing::to_oracle(pairwise);
    const auto theta = testing::theta_of(rc.frame);
    for (const auto& s : oracle::powerset(theta)) {
      const double w = want.count(s) ? want.at(s) : 0.0;
      const double a = got_all.count(s) ? got_all.at(s) : 0.0;
      const double p = got_pair.count(s) ? got_pair.at(s) : 0.0;
      worst = std::max({worst, std::abs(w - a), std::abs(w - p)});

      const FocalSet fs =
          FocalSet::of(rc.frame, std::vector<std::string>(s.begin(), s.end()));
      const double bel = belief(all, fs);
      const double pl = plausibility(all, fs);
      worst = std::max({worst, std::abs(bel - oracle::bel(want, s)),
                        std::abs(pl - oracle::pl(want, s))});
      // Pl(A) = 1 - Bel(A^c), with Bel(∅) = 0 when A is the whole frame.
      const auto comp = oracle::complement(theta, s);
      const double via_complement = 1.0 - (comp.empty() ? 0.0 : oracle::bel(want, comp));
      worst = std::max(worst, std::abs(pl - via_complement));
      ++subsets_checked;
    }
  }
  const double elapsed = seconds_since(start);
  c.check(worst <= 1e-9, "max deviation " + sci(worst));
  c.check(elapsed < 10.0, "runtime " + fmt(elapsed, 2) + " s");
  return c.report("1000 cases, " + std::to_string(subsets_checked) +
                  " subsets, max deviation " + sci(worst) + ", " +
                  fmt(elapsed, 2) + " s");
}

// --- 2 ----------------------------------------------------------------------

bool criterion2() {
  Criterion c(2, "bus scenario intervals");
  BeliefStore s;
  train(s, kBus, onto());
  auto iv = [&](DeonticModal v) {
    return confidence_in(s, Slot::kEvaluation, "EatingEvent", "Bus-RoadVehicle", v);
  };
  const auto opt = iv(DeonticModal::kOptional);
  const auto imp = iv(DeonticModal::kImpermissible);
  const auto obl = iv(DeonticModal::kObligatory);

  // Exact oracle values.
  const auto m = bus_oracle(5);
  for (const auto& [name, i] : std::vector<std::pair<std::string, UncertaintyInterval>>{
           {"Optional", opt}, {"Impermissible", imp}, {"Obligatory", obl}}) {
    c.check(std::abs(i.lower - oracle::bel(m, {name}).value()) <= 1e-9,
            name + " Bel vs oracle");
    c.check(std::abs(i.upper - oracle::pl(m, {name}).value()) <= 1e-9,
            name + " Pl vs oracle");
  }

  // Stated targets with the stated ±0.005 tolerance.
  for (const auto& [name, i] : std::vector<std::pair<std::string, UncertaintyInterval>>{
           {"Optional", opt}, {"Impermissible", imp}}) {
    c.check(std::abs(i.lower - 0.4770) <= 0.005 && std::abs(i.upper - 0.4818) <= 0.005,
            name + " = [" + fmt(i.lower) + ", " + fmt(i.upper) +
                "] not within 0.005 of [0.4770, 0.4818]");
    // The two-decimal targets are truncations.
    c.check(std::floor(i.lower * 100) / 100 == 0.47 &&
                std::floor(i.upper * 100) / 100 == 0.48,
            name + " does not truncate to [0.47, 0.48]");
    if (std::abs(i.lower - 0.47) > 0.005) {
      c.note(name + " Bel " + fmt(i.lower, 5) +
             " is more than 0.005 above the two-decimal 0.47; the exact value "
             "is 99/208");
    }
  }
  c.check(std::abs(obl.lower - 0.0434) <= 0.0005,
          "Obligatory Bel " + fmt(obl.lower));
  const double theta_mass =
      slot_mass(s, "norm1", Slot::kEvaluation).mass_of(FocalSet::whole(evaluation_fod()));
  c.check(std::abs(obl.upper - (obl.lower + theta_mass)) <= 1e-12,
          "Obligatory Pl != Bel + m(Θ)");
  c.check(std::abs(theta_mass - oracle::Rational(1, 208).value()) <= 1e-12,
          "m(Θ) vs oracle 1/208");

  // Prevalence after one descriptive teaching.
  assimilate(s, "People rarely eat on the bus.", onto());
  const auto rarely = confidence_in(s, Slot::kPrevalence, "EatingEvent",
                                    "Bus-RoadVehicle", Frequency::kRarely);
  c.check(std::abs(rarely.lower - 0.9) <= 1e-12 && std::abs(rarely.upper - 1.0) <= 1e-12,
          "Rarely = [" + fmt(rarely.lower) + ", " + fmt(rarely.upper) + "]");
  double max_other = 0.0;
  for (auto f : {Frequency::kContinuously, Frequency::kOften,
                 Frequency::kSometimes, Frequency::kNever}) {
    max_other = std::max(max_other, confidence_in(s, Slot::kPrevalence,
                                                  "EatingEvent", "Bus-RoadVehicle", f)
                                        .upper);
  }
  c.check(max_other <= 0.1 + 1e-12, "other frequency Pl " + fmt(max_other));

  return c.report("Opt [" + fmt(opt.lower) + ", " + fmt(opt.upper) + "], Imp [" +
                  fmt(imp.lower) + ", " + fmt(imp.upper) + "], Obl [" +
                  fmt(obl.lower) + ", " + fmt(obl.upper) + "], Rarely [" +
                  fmt(rarely.lower) + ", " + fmt(rarely.upper) + "]");
}

// --- 3 ----------------------------------------------------------------------

bool criterion3() {
  Criterion c(3, "Permissible trajectory");
  const auto points = emit_trajectory(kBus, "EatingEvent", "Bus-RoadVehicle",
                                      Slot::kEvaluation,
                                      DeonticModal::kPermissible, onto());
  c.check(points.size() == 5, "expected 5 points, got " + std::to_string(points.size()));
  const oracle::Set permissible{"Obligatory", "Optional"};
  // Stated approximations, reported for comparison only.
  const double stated[5][2] = {{0.9, 1.0},       {0.4737, 0.5263},
                               {0.0826, 0.0917}, {0.1526, 0.1607},
                               {0.5204, 0.5230}};
  std::string seq;
  double prev_width = 1.0;
  for (std::size_t i = 0; i < points.size() && i < 5; ++i) {
    const auto m = bus_oracle(i + 1);
    const double bel = oracle::bel(m, permissible).value();
    const double pl = oracle::pl(m, permissible).value();
    c.check(std::abs(points[i].belief - bel) <= 1e-3 &&
                std::abs(points[i].plausibility - pl) <= 1e-3,
            "step " + std::to_string(i + 1) + " vs oracle (" + fmt(bel) + ", " +
                fmt(pl) + ")");
    const double width = points[i].plausibility - points[i].belief;
    c.check(width <= prev_width + 1e-12,
            "width grew at step " + std::to_string(i + 1));
    prev_width = width;
    const double dev = std::max(std::abs(points[i].belief - stated[i][0]),
                                std::abs(points[i].plausibility - stated[i][1]));
    if (dev > 1e-3) {
      c.note("step " + std::to_string(i + 1) + " oracle (" + fmt(bel) + ", " +
             fmt(pl) + ") differs from the stated approximation (" +
             fmt(stated[i][0]) + ", " + fmt(stated[i][1]) + ") by " + fmt(dev));
    }
    seq += (i ? " " : "") + std::string("(") + fmt(points[i].belief) + "," +
           fmt(points[i].plausibility) + ")";
  }
  return c.report(seq);
}

// --- 4 ----------------------------------------------------------------------

bool criterion4() {
  Criterion c(4, "experiment 1 extraction");
  const auto& corpus = testing::bundled_corpus();
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_experiment1(corpus, onto());
  const double elapsed = seconds_since(start);
  std::vector<std::string> near;
  for (const auto& e : corpus) {
    if (e.near_miss) near.push_back(e.sentence);
  }
  auto fps = r.false_positives;
  std::sort(fps.begin(), fps.end());
  std::sort(near.begin(), near.end());
  c.check(r.recall == 1.0, "recall " + fmt(r.recall));
  c.check(r.precision >= 0.96, "precision " + fmt(r.precision));
  c.check(r.f1 >= 0.98, "F1 " + fmt(r.f1));
  c.check(fps == near, "false positives differ from the near-miss rows");
  c.check(elapsed < 5.0, "runtime " + fmt(elapsed, 2) + " s");
  return c.report("tp=" + std::to_string(r.tp) + " fp=" + std::to_string(r.fp) +
                  " tn=" + std::to_string(r.tn) + " fn=" + std::to_string(r.fn) +
                  " P=" + fmt(r.precision) + " R=" + fmt(r.recall) +
                  " F1=" + fmt(r.f1) + ", " + fmt(elapsed, 3) + " s");
}

// --- 5 ----------------------------------------------------------------------

struct TableRow {
  std::vector<std::string> training;
  std::string query;
  std::string output;
};

bool criterion5() {
  Criterion c(5, "experiment 2 queries");
  const auto& corpus = testing::bundled_corpus();
  BeliefStore store;
  const auto r = run_experiment2(corpus, onto(), kDefaultTeachingMass,
                                 kDefaultBeliefThreshold, &store);
  c.check(r.query_total > 0 && r.query_correct == r.query_total,
          std::to_string(r.query_correct) + "/" + std::to_string(r.query_total));
  for (const auto& q : r.queries) {
    if (!q.correct) c.check(false, q.query + " -> " + q.answer + ", expected " + q.expected);
  }

  const std::vector<TableRow> table = {
      {{"You can eat in the kitchen.", "You should eat in the kitchen."},
       "What is your evaluation of eating in the kitchen?", "Permissible"},
      {{"Walk in the hallway."},
       "What is your evaluation of walking in the hallway?", "Obligatory"},
      {{"You should not steal."}, "What is your evaluation of someone stealing?",
       "Impermissible"},
      {{"People sometimes steal."}, "How often is someone stealing?", "Sometimes"},
      {{"People often cry at funerals."},
       "How often is someone crying at funerals?", "Often"},
      {{"People rarely talk in elevators."},
       "How often is someone talking in elevators?", "Rarely"},
  };
  for (const auto& row : table) {
    for (const auto& s : row.training) {
      const bool present = std::any_of(corpus.begin(), corpus.end(), [&](const auto& e) {
        return e.positive() && e.sentence == s;
      });
      c.check(present, "corpus lacks positive `" + s + "`");
    }
    const bool annotated = std::any_of(corpus.begin(), corpus.end(), [&](const auto& e) {
      return e.has_query() && *e.query == row.query && e.expected == row.output;
    });
    c.check(annotated, "corpus lacks query `" + row.query + "` -> " + row.output);
    const auto form = parse_query(row.query, onto());
    c.check(form && answer(store, *form) == row.output, row.query);
  }

  const auto kitchen =
      answer_detail(store, *parse_query("What is your evaluation of eating in the kitchen?", onto()));
  const double center = kitchen.interval ? kitchen.interval->center() : 0.0;
  c.check(kitchen.label == "Permissible" && std::abs(center - 0.9737) <= 1e-3,
          "kitchen centre " + fmt(center));
  return c.report(std::to_string(r.query_correct) + "/" +
                  std::to_string(r.query_total) + " correct, worked example rows " +
                  std::to_string(table.size()) + "/6, kitchen centre " + fmt(center));
}

// --- 6 ----------------------------------------------------------------------

using SlotIntervals = std::map<std::string, UncertaintyInterval>;

// Every ladder value's interval for every (behavior, context, slot).
SlotIntervals all_intervals(const BeliefStore& s) {
  SlotIntervals out;
  for (const auto& f : s.frames()) {
    for (Slot slot : {Slot::kEvaluation, Slot::kPrevalence}) {
      if (f.evidence(slot).empty()) continue;
      const MassFunction m = slot_mass(f, slot);
      for (const auto& v : answer_ladder(slot)) {
        out[f.behavior + "|" + f.context + "|" + std::string(label(v))] =
            interval(m, element_set(v));
      }
    }
  }
  return out;
}

bool criterion6() {
  Criterion c(6, "order invariance");
  const auto& corpus = testing::bundled_corpus();
  BeliefStore base_store;
  const auto base = run_experiment2(corpus, onto(), kDefaultTeachingMass,
                                    kDefaultBeliefThreshold, &base_store);
  const auto base_iv = all_intervals(base_store);

  std::vector<CorpusEntry> positives, negatives;
  for (const auto& e : corpus) (e.positive() ? positives : negatives).push_back(e);
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int p = 0; p < 20; ++p) {
    std::shuffle(positives.begin(), positives.end(), rng);
    std::vector<CorpusEntry> permuted = positives;
    permuted.insert(permuted.end(), negatives.begin(), negatives.end());
    BeliefStore store;
    const auto r = run_experiment2(permuted, onto(), kDefaultTeachingMass,
                                   kDefaultBeliefThreshold, &store);
    c.check(r.query_correct == base.query_correct && r.query_total == base.query_total,
            "permutation " + std::to_string(p) + " accuracy " + fmt(r.accuracy));
    const auto iv = all_intervals(store);
    c.check(iv.size() == base_iv.size(),
            "permutation " + std::to_string(p) + " has different frames");
    for (const auto& [key, i] : base_iv) {
      auto it = iv.find(key);
      if (it == iv.end()) {
        c.check(false, "permutation " + std::to_string(p) + " lacks " + key);
        continue;
      }
      worst = std::max({worst, std::abs(it->second.lower - i.lower),
                        std::abs(it->second.upper - i.upper)});
    }
  }
  c.check(worst <= 1e-9, "max interval deviation " + sci(worst));
  return c.report("20 permutations, " + std::to_string(base_iv.size()) +
                  " intervals, max deviation " + sci(worst) +
                  ", accuracy " + fmt(base.accuracy));
}

// --- 7 ----------------------------------------------------------------------

void check_exclusive_and_single(Criterion& c, const BeliefStore& s,
                                const std::string& run, std::size_t* singles) {
  for (const auto& f : s.frames()) {
    for (Slot slot : {Slot::kEvaluation, Slot::kPrevalence}) {
      const auto& body = f.evidence(slot);
      if (body.empty()) continue;
      const MassFunction m = slot_mass(f, slot);
      int believed = 0;
      for (const auto& v : first_order_values(slot)) {
        if (interval(m, element_set(v)).center() >= kDefaultBeliefThreshold) ++believed;
      }
      c.check(believed <= 1, run + ": " + f.id + " believes " +
                                 std::to_string(believed) + " first-order values");
      if (body.size() == 1) {
        ++*singles;
        const auto i = interval(m, body[0].focal);
        c.check(std::abs(i.center() - 0.95) <= 1e-12,
                run + ": single teaching in " + f.id + " centre " + fmt(i.center()));
      }
    }
  }
}

bool criterion7() {
  Criterion c(7, "exclusivity and threshold");
  std::size_t singles = 0;
  BeliefStore full;
  train(full, positive_sentences(testing::bundled_corpus()), onto());
  check_exclusive_and_single(c, full, "bundled", &singles);

  // Random training runs: draws with replacement from the positives.
  const auto pool = positive_sentences(testing::bundled_corpus());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> length(1, 150);
  for (int run = 0; run < 50; ++run) {
    std::vector<std::string> sample;
    for (int i = length(rng); i > 0; --i) sample.push_back(pool[pick(rng)]);
    BeliefStore s;
    train(s, sample, onto());
    check_exclusive_and_single(c, s, "run " + std::to_string(run), &singles);
  }
  return c.report("bundled + 50 random runs, " + std::to_string(singles) +
                  " single-teaching slots at centre 0.95");
}

// --- 8 ----------------------------------------------------------------------

bool criterion8() {
  Criterion c(8, "persistence");
  std::random_device rd;
  const fs::path dir =
      fs::temp_directory_path() / ("normlearn-accept-" + std::to_string(rd()));
  fs::create_directories(dir);
  const std::string ontology = (testing::data_dir() / "ontology.txt").string();
  const std::string corpus = (testing::data_dir() / "corpus.tsv").string();
  const std::string batch = (dir / "batch.txt").string();
  const std::string repl = (dir / "repl.txt").string();

  auto run = [](std::vector<std::string> args, const std::string& input) {
    args.insert(args.begin(), "normlearn");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  };

  c.check(run({"train", "--corpus", corpus, "--store", batch, "--ontology", ontology}, "") ==
              kExitOk,
          "train failed");
  std::string session;
  for (const auto& s : positive_sentences(testing::bundled_corpus())) session += s + "\n";
  session += ":quit\n";
  c.check(run({"repl", "--store", repl, "--ontology", ontology}, session) == kExitOk,
          "repl failed");

  const std::string a = fs::exists(batch) ? read_file(batch) : "";
  const std::string b = fs::exists(repl) ? read_file(repl) : "";
  c.check(!a.empty() && a == b, "batch and REPL store files differ");

  // load(save(store)) answers every question the same way.
  std::size_t compared = 0;
  if (!a.empty()) {
    const BeliefStore original = load_store(a);
    const BeliefStore reloaded = load_store(save_store(original));
    c.check(save_store(reloaded) == a, "save(load(file)) differs from file");
    std::vector<std::string> questions;
    for (const auto& e : testing::bundled_corpus()) {
      if (e.has_query()) questions.push_back(*e.query);
    }
    questions.push_back("What is your evaluation of dancing in the hospital?");
    questions.push_back("How often is someone walking in the hallway?");
    for (const auto& q : questions) {
      const auto form = parse_query(q, onto());
      if (!form) {
        c.check(false, "unparsable " + q);
        continue;
      }
      const auto x = answer_detail(original, *form);
      const auto y = answer_detail(reloaded, *form);
      const bool same_iv =
          x.interval.has_value() == y.interval.has_value() &&
          (!x.interval || (x.interval->lower == y.interval->lower &&
                           x.interval->upper == y.interval->upper));
      c.check(x.label == y.label && same_iv, q);
      ++compared;
    }
  }
  fs::remove_all(dir);
  return c.report(std::to_string(a.size()) + " bytes identical, " +
                  std::to_string(compared) + " answers reproduced after reload");
}

}  // namespace

int main() {
  bool ok = true;
  for (auto criterion : {criterion1, criterion2, criterion3, criterion4,
                         criterion5, criterion6, criterion7, criterion8}) {
    try {
      ok &= criterion();
    } catch (const std::exception& e) {
      std::printf("FAIL (exception) %s\n", e.what());
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
