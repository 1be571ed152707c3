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

#include "normlearn/cli.hpp"

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "normlearn/errors.hpp"
#include "normlearn/eval_harness.hpp"
#include "normlearn/learning.hpp"
#include "normlearn/nl_pipeline.hpp"
#include "normlearn/norm_model.hpp"
#include "normlearn/ontology.hpp"
#include "normlearn/query.hpp"
#include "normlearn/service.hpp"
#include "normlearn/text_util.hpp"

namespace normlearn {
namespace {

namespace fs = std::filesystem;

// Thrown for anything that maps to exit status 2.
struct BadInput {
  std::string message;
};

Ontology load_ontology(const std::string& path) {
  if (path.empty() || !fs::exists(path)) {
    throw BadInput{"ontology not found: " + path};
  }
  try {
    return Ontology::load_file(path);
  } catch (const Error& e) {
    throw BadInput{path + ": " + e.what()};
  }
}

BeliefStore load_store_file(const std::string& path, bool must_exist) {
  if (!fs::exists(path)) {
    if (must_exist) throw BadInput{"store not found: " + path};
    return {};
  }
  try {
    return load_store(read_file(path));
  } catch (const Error& e) {
    throw BadInput{path + ": " + e.what()};
  }
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  if (!fs::exists(path)) throw BadInput{"corpus not found: " + path};
  try {
    return load_corpus(read_file(path));
  } catch (const Error& e) {
    throw BadInput{path + ": " + e.what()};
  }
}

void check_unit(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(what) + " must lie in (0,1)");
  }
}

std::string interval_text(const UncertaintyInterval& i) {
  return "[" + format_4(i.lower) + ", " + format_4(i.upper) + "]";
}

struct Options {
  std::string corpus;
  std::string store;
  std::string ontology;
  std::string question;
  std::string report = "text";
  std::string host = "127.0.0.1";
  std::string sentences;
  std::string behavior;
  std::string context;
  std::string slot = "evaluation";
  std::string value;
  double mass = kDefaultTeachingMass;
  double threshold = kDefaultBeliefThreshold;
  int port = 8080;
  bool verbose = false;
};

int cmd_train(const Options& opt, std::ostream& out) {
  check_unit(opt.mass, "--mass");
  const Ontology o = load_ontology(opt.ontology);
  const auto corpus = load_corpus_file(opt.corpus);
  BeliefStore store = load_store_file(opt.store, false);
  const auto sentences = positive_sentences(corpus);
  std::size_t learned = 0, merged = 0, ignored = 0;
  for (const auto& r : train(store, sentences, o, opt.mass)) {
    switch (r.outcome) {
      case Outcome::kLearnedNewFrame: ++learned; break;
      case Outcome::kMergedIntoExisting: ++merged; break;
      case Outcome::kNoNormDetected: ++ignored; break;
    }
  }
  write_file_atomic(opt.store, save_store(store));
  out << "trained on " << sentences.size() << " sentences: learned "
      << learned << ", merged " << merged << ", ignored " << ignored << "; "
      << store.frames().size() << " frames in " << opt.store << '\n';
  return kExitOk;
}

int cmd_query(const Options& opt, std::ostream& out, std::ostream& err) {
  check_unit(opt.threshold, "--threshold");
  const Ontology o = load_ontology(opt.ontology);
  const BeliefStore store = load_store_file(opt.store, true);
  const auto form = parse_query(opt.question, o);
  if (!form) {
    err << "cannot parse question: " << opt.question << '\n';
    return kExitUnparsableQuestion;
  }
  const AnswerDetail d = answer_detail(store, *form, opt.threshold);
  out << d.label << '\n';
  if (opt.verbose) {
    if (d.frame_id) out << "frame: " << *d.frame_id << '\n';
    if (d.interval) {
      out << "interval: " << interval_text(*d.interval)
          << " center: " << format_4(d.interval->center()) << '\n';
    }
  }
  return kExitOk;
}

void repl_line(NormService& service, const std::string& line,
               std::ostream& out) {
  if (line == ":norms") {
    out << service.norms_table();
    return;
  }
  if (line.rfind(":evidence", 0) == 0) {
    const std::string id(trim(line.substr(9)));
    if (id.empty()) {
      out << "usage: :evidence <norm id>\n";
    } else {
      out << service.evidence_table(id);
    }
    return;
  }
  if (line.front() == ':') {
    out << "commands: :norms, :evidence <id>, :quit\n";
    return;
  }
  if (parse_query(line, service.ontology())) {
    const auto r = service.query(line);
    out << r["answer"].get<std::string>();
    if (!r["interval"].is_null()) {
      out << " " << interval_text({r["interval"][0].get<double>(),
                                   r["interval"][1].get<double>()});
    }
    out << '\n';
    return;
  }
  if (line.back() == '?') {
    out << "cannot parse question: " << line << '\n';
    return;
  }
  out << service.teach(line)["message"].get<std::string>() << '\n';
}

int cmd_repl(const Options& opt, std::istream& in, std::ostream& out,
             std::ostream& err) {
  ServiceConfig config;
  config.store_path = opt.store;
  config.ontology_path = opt.ontology;
  config.teaching_mass = opt.mass;
  config.belief_threshold = opt.threshold;
  check_unit(opt.mass, "--mass");
  check_unit(opt.threshold, "--threshold");
  NormService service(config, load_ontology(opt.ontology),
                      load_store_file(opt.store, false));
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line(trim(raw));
    if (line.empty()) continue;
    if (line == ":quit") break;
    try {
      repl_line(service, line, out);
    } catch (const ServiceError& e) {
      err << "error: " << e.detail() << '\n';
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
    }
  }
  return kExitOk;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  check_unit(opt.mass, "--mass");
  check_unit(opt.threshold, "--threshold");
  const Ontology o = load_ontology(opt.ontology);
  const auto corpus = load_corpus_file(opt.corpus);
  const auto report = run_evaluation(corpus, o, opt.mass, opt.threshold);
  out << (opt.report == "json" ? render_report_json(report)
                               : render_report_text(report));
  return kExitOk;
}

int cmd_serve(const Options& opt, std::ostream& out) {
  ServiceConfig config;
  config.store_path = opt.store;
  config.ontology_path = opt.ontology;
  config.teaching_mass = opt.mass;
  config.belief_threshold = opt.threshold;
  config.listen_port = opt.port;
  config.validate();
  NormService service(config, load_ontology(opt.ontology),
                      load_store_file(opt.store, false));
  HttpServer server(service);
  out << "serving on http://" << opt.host << ":" << opt.port << std::endl;
  if (!server.listen_blocking(opt.host, opt.port)) {
    throw Error(ErrorCode::kIoError,
                "cannot listen on " + opt.host + ":" + std::to_string(opt.port));
  }
  return kExitOk;
}

int cmd_trajectory(const Options& opt, std::ostream& out) {
  check_unit(opt.mass, "--mass");
  const Ontology o = load_ontology(opt.ontology);
  if (!fs::exists(opt.sentences)) {
    throw BadInput{"sentence file not found: " + opt.sentences};
  }
  std::vector<std::string> sentences;
  for (const auto& l : split_lines(read_file(opt.sentences))) {
    const auto t = trim(l);
    if (!t.empty() && t.front() != '#') sentences.emplace_back(t);
  }
  const auto slot = parse_slot(opt.slot);
  if (!slot) throw Error(ErrorCode::kInvalidConfig, "unknown slot " + opt.slot);
  const auto value = parse_value(*slot, opt.value);
  if (!value) {
    throw Error(ErrorCode::kForeignElement,
                opt.value + " is not a " + opt.slot + " value");
  }
  out << trajectory_csv(emit_trajectory(sentences, opt.behavior, opt.context,
                                        *slot, *value, o, opt.mass));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Learn social norms from natural-language teachings."};
  app.name("normlearn");
  app.require_subcommand(1);
  Options opt;

  auto* train = app.add_subcommand("train", "train a store on corpus positives");
  train->add_option("--corpus", opt.corpus, "corpus TSV")->required();
  train->add_option("--store", opt.store, "belief store file")->required();
  train->add_option("--ontology", opt.ontology, "ontology file")->required();
  train->add_option("--mass", opt.mass, "mass per teaching");

  auto* query = app.add_subcommand("query", "answer one question");
  query->add_option("--store", opt.store, "belief store file")->required();
  query->add_option("--ontology", opt.ontology, "ontology file")->required();
  query->add_option("--threshold", opt.threshold, "belief threshold");
  query->add_flag("--verbose", opt.verbose, "print the interval");
  query->add_option("question", opt.question, "question text")->required();

  auto* repl = app.add_subcommand("repl", "interactive teaching session");
  repl->add_option("--store", opt.store, "belief store file")->required();
  repl->add_option("--ontology", opt.ontology, "ontology file")->required();
  repl->add_option("--mass", opt.mass, "mass per teaching");
  repl->add_option("--threshold", opt.threshold, "belief threshold");

  auto* eval = app.add_subcommand("eval", "run both experiments on a corpus");
  eval->add_option("--corpus", opt.corpus, "corpus TSV")->required();
  eval->add_option("--ontology", opt.ontology, "ontology file")->required();
  eval->add_option("--report", opt.report, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  eval->add_option("--mass", opt.mass, "mass per teaching");
  eval->add_option("--threshold", opt.threshold, "belief threshold");

  auto* serve = app.add_subcommand("serve", "HTTP/JSON service");
  serve->add_option("--port", opt.port, "listen port");
  serve->add_option("--host", opt.host, "listen address");
  serve->add_option("--store", opt.store, "belief store file")->required();
  serve->add_option("--ontology", opt.ontology, "ontology file")->required();
  serve->add_option("--mass", opt.mass, "mass per teaching");
  serve->add_option("--threshold", opt.threshold, "belief threshold");

  auto* traj = app.add_subcommand(
      "trajectory", "interval of one value after each teaching, as CSV");
  traj->add_option("--sentences", opt.sentences, "one teaching per line")
      ->required();
  traj->add_option("--ontology", opt.ontology, "ontology file")->required();
  traj->add_option("--behavior", opt.behavior, "behavior concept")->required();
  traj->add_option("--context", opt.context, "context concept")->required();
  traj->add_option("--slot", opt.slot, "evaluation or prevalence");
  traj->add_option("--value", opt.value, "slot value label")->required();
  traj->add_option("--mass", opt.mass, "mass per teaching");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*train) return cmd_train(opt, out);
    if (*query) return cmd_query(opt, out, err);
    if (*repl) return cmd_repl(opt, in, out, err);
    if (*eval) return cmd_eval(opt, out);
    if (*serve) return cmd_serve(opt, out);
    if (*traj) return cmd_trajectory(opt, out);
  } catch (const BadInput& e) {
    err << "normlearn: " << e.message << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "normlearn: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace normlearn
