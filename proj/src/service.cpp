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

#include "normlearn/service.hpp"

#include <mutex>
#include <sstream>

#include "normlearn/errors.hpp"
#include "normlearn/nl_pipeline.hpp"
#include "normlearn/text_util.hpp"

namespace normlearn {

using nlohmann::json;

void ServiceConfig::validate() const {
  if (!(teaching_mass > 0.0 && teaching_mass < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                "teaching mass must lie in (0,1), got " +
                    format_double(teaching_mass));
  }
  if (!(belief_threshold > 0.0 && belief_threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                "belief threshold must lie in (0,1), got " +
                    format_double(belief_threshold));
  }
  if (listen_port < 0 || listen_port > 65535) {
    throw Error(ErrorCode::kInvalidConfig,
                "port out of range: " + std::to_string(listen_port));
  }
  if (ontology_path.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "no ontology path");
  }
}

namespace {

BeliefStore load_store_if_present(const std::filesystem::path& path) {
  if (path.empty() || !std::filesystem::exists(path)) return {};
  return load_store(read_file(path));
}

json interval_json(const UncertaintyInterval& i) {
  return json::array({i.lower, i.upper});
}

json values_json(const std::vector<SlotValue>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(std::string(label(v)));
  return out;
}

// Every first-order and second-order value with its interval.
json slot_intervals(const NormFrame& f, Slot slot) {
  json out = json::object();
  if (f.evidence(slot).empty()) return out;
  const MassFunction m = slot_mass(f, slot);
  for (const auto& v : answer_ladder(slot)) {
    out[std::string(label(v))] = interval_json(interval(m, element_set(v)));
  }
  return out;
}

json most_believed_json(const NormFrame& f, Slot slot) {
  if (f.evidence(slot).empty()) return nullptr;
  return values_json(most_believed_values(slot_mass(f, slot), slot));
}

ServiceError not_found(std::string_view frame_id) {
  return ServiceError(404, "UnknownFrame",
                      "no norm frame `" + std::string(frame_id) + "`");
}

}  // namespace

NormService::NormService(ServiceConfig config)
    : config_(std::move(config)) {
  config_.validate();
  ontology_ = Ontology::load_file(config_.ontology_path);
  store_ = load_store_if_present(config_.store_path);
}

NormService::NormService(ServiceConfig config, Ontology ontology,
                         BeliefStore store)
    : config_(std::move(config)),
      ontology_(std::move(ontology)),
      store_(std::move(store)) {
  if (!(config_.teaching_mass > 0.0 && config_.teaching_mass < 1.0) ||
      !(config_.belief_threshold > 0.0 && config_.belief_threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "mass and threshold lie in (0,1)");
  }
}

BeliefStore NormService::snapshot() const {
  std::shared_lock lock(mu_);
  return store_;
}

void NormService::persist_locked() {
  if (config_.store_path.empty()) return;
  write_file_atomic(config_.store_path, save_store(store_));
  store_.mark_clean();
}

json NormService::teach(std::string_view text) {
  if (trim(text).empty()) {
    throw ServiceError(400, "EmptyTeaching", "teaching text is empty");
  }
  std::unique_lock lock(mu_);
  const AssimilationResult r =
      assimilate(store_, text, ontology_, config_.teaching_mass);
  persist_locked();

  json out;
  out["outcome"] = std::string(outcome_name(r.outcome));
  out["sentence"] = r.sentence_id;
  out["message"] = describe(r, store_);
  out["frame"] = nullptr;
  out["slot"] = nullptr;
  out["value"] = nullptr;
  out["mass"] = nullptr;
  out["interval"] = nullptr;
  if (r.frame_id && r.chosen) {
    const NormFrame& f = store_.frame(*r.frame_id);
    const Slot slot = r.chosen->slot();
    const SlotValue value = r.chosen->value();
    out["frame"] = f.id;
    out["behavior"] = f.behavior;
    out["context"] = f.context;
    out["slot"] = std::string(slot_name(slot));
    out["value"] = std::string(label(value));
    out["mass"] = r.evidence->mass;
    out["interval"] =
        interval_json(interval(slot_mass(f, slot), element_set(value)));
  }
  return out;
}

json NormService::query(std::string_view text) const {
  const auto form = parse_query(text, ontology_);
  if (!form) {
    throw ServiceError(400, "UnparsableQuestion",
                       "question matches no query template: " +
                           std::string(text));
  }
  const BeliefStore store = snapshot();
  const AnswerDetail d = answer_detail(store, *form, config_.belief_threshold);
  json out;
  out["answer"] = d.label;
  out["interval"] = d.interval ? interval_json(*d.interval) : json(nullptr);
  out["believed"] = d.believed;
  out["frame"] = d.frame_id ? json(*d.frame_id) : json(nullptr);
  out["slot"] = std::string(slot_name(form->slot()));
  return out;
}

json NormService::norms() const {
  const BeliefStore store = snapshot();
  json out = json::array();
  for (const auto& f : store.frames()) {
    json row;
    row["id"] = f.id;
    row["behavior"] = f.behavior;
    row["context"] = f.context;
    row["most_believed_evaluation"] = most_believed_json(f, Slot::kEvaluation);
    row["most_believed_prevalence"] = most_believed_json(f, Slot::kPrevalence);
    row["intervals"] = {
        {"evaluation", slot_intervals(f, Slot::kEvaluation)},
        {"prevalence", slot_intervals(f, Slot::kPrevalence)}};
    row["evidence_count"] =
        f.evaluation_evidence.size() + f.prevalence_evidence.size();
    out.push_back(std::move(row));
  }
  return out;
}

json NormService::evidence(std::string_view frame_id) const {
  const BeliefStore store = snapshot();
  const NormFrame* f = store.find_by_id(frame_id);
  if (!f) throw not_found(frame_id);
  std::vector<const EvidenceRecord*> records;
  for (const auto* list : {&f->evaluation_evidence, &f->prevalence_evidence}) {
    for (const auto& r : *list) records.push_back(&r);
  }
  json out = json::array();
  for (const auto* r : records) {
    out.push_back({{"event", r->event_id},
                   {"sentence", r->sentence_id},
                   {"slot", std::string(slot_name(r->slot))},
                   {"values", r->focal.members()},
                   {"mass", r->mass}});
  }
  return out;
}

json NormService::trajectory(std::string_view frame_id, std::string_view slot,
                             std::string_view value) const {
  const auto s = parse_slot(slot);
  if (!s) {
    throw ServiceError(400, "InvalidSlot",
                       "slot must be evaluation or prevalence, got `" +
                           std::string(slot) + "`");
  }
  const auto v = parse_value(*s, value);
  if (!v) {
    throw ServiceError(400, "InvalidValue",
                       "`" + std::string(value) + "` is not a " +
                           std::string(slot_name(*s)) + " value");
  }
  const BeliefStore store = snapshot();
  const NormFrame* f = store.find_by_id(frame_id);
  if (!f) throw not_found(frame_id);
  json out = json::array();
  for (const auto& p : evidence_trajectory(*f, *s, *v)) {
    out.push_back(
        {{"step", p.step}, {"belief", p.belief}, {"plausibility", p.plausibility}});
  }
  return out;
}

json NormService::health() const {
  std::shared_lock lock(mu_);
  return {{"status", "ok"},
          {"frames", store_.frames().size()},
          {"evidence", store_.evidence_count()},
          {"teachings", store_.discourse_log().size()}};
}

std::string NormService::norms_table() const {
  const BeliefStore store = snapshot();
  if (store.frames().empty()) return "no norms learned\n";
  std::ostringstream out;
  auto cell = [](const NormFrame& f, Slot slot) -> std::string {
    if (f.evidence(slot).empty()) return "-";
    const MassFunction m = slot_mass(f, slot);
    std::string s;
    for (const auto& v : most_believed_values(m, slot)) {
      if (!s.empty()) s += ",";
      s += label(v);
    }
    // All tied values share one belief; report the first.
    const auto i = interval(m, element_set(most_believed_values(m, slot).front()));
    return s + " [" + format_4(i.lower) + ", " + format_4(i.upper) + "]";
  };
  for (const auto& f : store.frames()) {
    out << f.id << "  " << f.behavior << " @ " << f.context
        << "  evaluation: " << cell(f, Slot::kEvaluation)
        << "  prevalence: " << cell(f, Slot::kPrevalence) << '\n';
  }
  return out.str();
}

std::string NormService::evidence_table(std::string_view frame_id) const {
  const BeliefStore store = snapshot();
  const NormFrame& f = store.frame(frame_id);
  std::ostringstream out;
  out << f.id << "  " << f.behavior << " @ " << f.context << '\n';
  for (const auto* list : {&f.evaluation_evidence, &f.prevalence_evidence}) {
    for (const auto& r : *list) {
      std::string values;
      for (const auto& m : r.focal.members()) {
        if (!values.empty()) values += "|";
        values += m;
      }
      out << "  " << r.event_id << "  " << r.sentence_id << "  "
          << slot_name(r.slot) << " " << values << " " << format_4(r.mass)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace normlearn
