#include "eri/blueprint.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "eri/composite.hpp"
#include "eri/errors.hpp"
#include "eri/json_io.hpp"

namespace eri {

namespace {
using nlohmann::json;

constexpr double kWeightSumTol = 1e-9;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where,
                         std::vector<std::string>& issues) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      issues.push_back(where + ": unknown key '" + it.key() + "'");
  }
}

}  // namespace

Blueprint::Blueprint(std::string version, std::vector<TopicSpec> topics,
                     std::vector<SectionSpec> sections, double exam_duration_s,
                     std::string marking_rules_json)
    : version_(std::move(version)),
      topics_(std::move(topics)),
      sections_(std::move(sections)),
      exam_duration_s_(exam_duration_s),
      marking_rules_json_(std::move(marking_rules_json)) {
  std::vector<std::string> issues;

  for (int i = 0; i < static_cast<int>(sections_.size()); ++i) {
    const auto& s = sections_[i];
    if (!section_idx_.emplace(s.id, i).second)
      issues.push_back("duplicate section id '" + s.id + "'");
    if (!(s.pace_target_s > 0.0))
      issues.push_back("section '" + s.id + "': pace_target_s must be > 0, got " +
                       format_real(s.pace_target_s));
  }

  double weight_sum = 0.0;
  for (int i = 0; i < static_cast<int>(topics_.size()); ++i) {
    const auto& t = topics_[i];
    if (!topic_idx_.emplace(t.id, i).second)
      issues.push_back("duplicate topic id '" + t.id + "'");
    if (!section_idx_.count(t.section))
      issues.push_back("topic '" + t.id + "' references unknown section '" +
                       t.section + "'");
    if (t.weight < 0.0 || !std::isfinite(t.weight))
      issues.push_back("topic '" + t.id + "': weight must be >= 0, got " +
                       format_real(t.weight));
    if (t.evidence_threshold < 1)
      issues.push_back("topic '" + t.id + "': evidence_threshold must be >= 1, got " +
                       std::to_string(t.evidence_threshold));
    if (t.retention_rate_per_day < 0.0 || !std::isfinite(t.retention_rate_per_day))
      issues.push_back("topic '" + t.id + "': retention_rate_per_day must be >= 0, got " +
                       format_real(t.retention_rate_per_day));
    weight_sum += t.weight;
  }
  if (std::fabs(weight_sum - 1.0) > kWeightSumTol)
    issues.push_back("weights sum to " + format_real(weight_sum) +
                     ", expected 1 within 1e-9");
  if (!(exam_duration_s_ > 0.0))
    issues.push_back("exam_duration_s must be > 0, got " +
                     format_real(exam_duration_s_));

  if (!issues.empty()) throw ValidationError(std::move(issues));
}

int Blueprint::topic_index(const std::string& id) const {
  auto it = topic_idx_.find(id);
  return it == topic_idx_.end() ? -1 : it->second;
}

int Blueprint::section_index(const std::string& id) const {
  auto it = section_idx_.find(id);
  return it == section_idx_.end() ? -1 : it->second;
}

double Blueprint::topic_pace_target_s(int topic_idx) const {
  const auto& t = topics_[static_cast<std::size_t>(topic_idx)];
  return sections_[static_cast<std::size_t>(section_index(t.section))].pace_target_s;
}

std::string Blueprint::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.key("version").value(version_);
  w.key("exam_duration_s").value(exam_duration_s_);
  w.key("sections").begin_array();
  for (const auto& s : sections_) {
    w.begin_object();
    w.key("id").value(s.id);
    w.key("pace_target_s").value(s.pace_target_s);
    w.end_object();
  }
  w.end_array();
  w.key("topics").begin_array();
  for (const auto& t : topics_) {
    w.begin_object();
    w.key("id").value(t.id);
    w.key("section").value(t.section);
    w.key("weight").value(t.weight);
    w.key("evidence_threshold").value(t.evidence_threshold);
    w.key("retention_rate_per_day").value(t.retention_rate_per_day);
    w.end_object();
  }
  w.end_array();
  if (marking_rules_json_ != "null") w.key("marking_rules").raw(marking_rules_json_);
  w.end_object();
  return w.take() + "\n";
}

Blueprint parse_blueprint(const std::string& raw) {
  json doc;
  try {
    doc = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("blueprint: ") + e.what());
  }

  std::vector<std::string> issues;
  if (!doc.is_object()) throw ParseError("blueprint: top level must be an object");

  reject_unknown_keys(doc,
                      {"version", "exam_duration_s", "sections", "topics",
                       "marking_rules"},
                      "blueprint", issues);

  auto require = [&](const char* k, json::value_t t, const char* tname) -> const json* {
    if (!doc.contains(k)) {
      issues.push_back(std::string("missing key '") + k + "'");
      return nullptr;
    }
    const json& v = doc.at(k);
    bool ok = t == json::value_t::number_float ? v.is_number() : v.type() == t;
    if (!ok) {
      issues.push_back(std::string("key '") + k + "' must be a " + tname);
      return nullptr;
    }
    return &v;
  };

  const json* version = require("version", json::value_t::string, "string");
  const json* duration = require("exam_duration_s", json::value_t::number_float, "number");
  const json* sections = require("sections", json::value_t::array, "array");
  const json* topics = require("topics", json::value_t::array, "array");

  std::vector<SectionSpec> section_specs;
  if (sections) {
    int i = 0;
    for (const auto& s : *sections) {
      std::string where = "sections[" + std::to_string(i++) + "]";
      if (!s.is_object()) {
        issues.push_back(where + " must be an object");
        continue;
      }
      reject_unknown_keys(s, {"id", "pace_target_s"}, where, issues);
      SectionSpec spec;
      if (s.contains("id") && s["id"].is_string())
        spec.id = s["id"].get<std::string>();
      else
        issues.push_back(where + ": 'id' must be a string");
      if (s.contains("pace_target_s") && s["pace_target_s"].is_number())
        spec.pace_target_s = s["pace_target_s"].get<double>();
      else
        issues.push_back(where + ": 'pace_target_s' must be a number");
      section_specs.push_back(std::move(spec));
    }
  }

  std::vector<TopicSpec> topic_specs;
  if (topics) {
    int i = 0;
    for (const auto& t : *topics) {
      std::string where = "topics[" + std::to_string(i++) + "]";
      if (!t.is_object()) {
        issues.push_back(where + " must be an object");
        continue;
      }
      reject_unknown_keys(
          t, {"id", "section", "weight", "evidence_threshold", "retention_rate_per_day"},
          where, issues);
      TopicSpec spec;
      if (t.contains("id") && t["id"].is_string())
        spec.id = t["id"].get<std::string>();
      else
        issues.push_back(where + ": 'id' must be a string");
      if (t.contains("section") && t["section"].is_string())
        spec.section = t["section"].get<std::string>();
      else
        issues.push_back(where + ": 'section' must be a string");
      if (t.contains("weight") && t["weight"].is_number())
        spec.weight = t["weight"].get<double>();
      else
        issues.push_back(where + ": 'weight' must be a number");
      if (t.contains("evidence_threshold")) {
        if (t["evidence_threshold"].is_number_integer())
          spec.evidence_threshold = t["evidence_threshold"].get<int>();
        else
          issues.push_back(where + ": 'evidence_threshold' must be an integer");
      }
      if (t.contains("retention_rate_per_day")) {
        if (t["retention_rate_per_day"].is_number())
          spec.retention_rate_per_day = t["retention_rate_per_day"].get<double>();
        else
          issues.push_back(where + ": 'retention_rate_per_day' must be a number");
      }
      topic_specs.push_back(std::move(spec));
    }
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));

  std::string marking = "null";
  if (doc.contains("marking_rules")) marking = doc["marking_rules"].dump();

  return Blueprint(version->get<std::string>(), std::move(topic_specs),
                   std::move(section_specs), duration->get<double>(),
                   std::move(marking));
}

double tv_distance(const Blueprint& a, const Blueprint& b) {
  double sum = 0.0;
  for (const auto& t : a.topics()) {
    int j = b.topic_index(t.id);
    double wb = j < 0 ? 0.0 : b.topics()[static_cast<std::size_t>(j)].weight;
    sum += std::fabs(t.weight - wb);
  }
  for (const auto& t : b.topics()) {
    if (a.topic_index(t.id) < 0) sum += t.weight;  // weight 0 on the a side
  }
  return 0.5 * sum;
}

double drift_bound(double delta, const WeightVector& alpha) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw DomainError("drift_bound: delta must be in [0,1], got " +
                      format_real(delta));
  auto issues = alpha.check();
  if (!issues.empty()) throw DomainError("drift_bound: " + issues.front());
  double topic_mass = alpha[kM] + alpha[kC] + alpha[kR];
  return std::min(1.0, topic_mass * 3.0 * delta);
}

double drift_bound_raw(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw DomainError("drift_bound: delta must be in [0,1], got " +
                      format_real(delta));
  return 3.0 * delta;
}

}  // namespace eri
