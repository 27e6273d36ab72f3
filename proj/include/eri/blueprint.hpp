#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace eri {

struct TopicSpec {
  std::string id;
  std::string section;
  double weight = 0.0;
  int evidence_threshold = 5;            // attempts needed for full coverage
  double retention_rate_per_day = 0.05;  // forgetting-curve decay rate
};

struct SectionSpec {
  std::string id;
  double pace_target_s = 0.0;  // target seconds per item
};

// Exam blueprint. Immutable after construction; all operations on it are
// pure, so concurrent reads are safe.
class Blueprint {
 public:
  Blueprint(std::string version, std::vector<TopicSpec> topics,
            std::vector<SectionSpec> sections, double exam_duration_s,
            std::string marking_rules_json = "null");

  const std::string& version() const { return version_; }
  const std::vector<TopicSpec>& topics() const { return topics_; }
  const std::vector<SectionSpec>& sections() const { return sections_; }
  double exam_duration_s() const { return exam_duration_s_; }
  // Carried verbatim, never interpreted.
  const std::string& marking_rules_json() const { return marking_rules_json_; }

  // Index of a topic/section id, or -1.
  int topic_index(const std::string& id) const;
  int section_index(const std::string& id) const;

  // Pace target of the section a topic belongs to.
  double topic_pace_target_s(int topic_idx) const;

  std::string to_json() const;

 private:
  std::string version_;
  std::vector<TopicSpec> topics_;
  std::vector<SectionSpec> sections_;
  double exam_duration_s_;
  std::string marking_rules_json_;
  std::unordered_map<std::string, int> topic_idx_;
  std::unordered_map<std::string, int> section_idx_;
};

// Parses and validates the blueprint JSON document. Throws ParseError on
// malformed syntax and ValidationError listing every violated invariant.
Blueprint parse_blueprint(const std::string& raw);

// Total-variation distance between the two weight maps, taken over the
// union of topic ids; a topic missing from one blueprint counts as weight 0.
double tv_distance(const Blueprint& a, const Blueprint& b);

struct WeightVector;  // composite.hpp

// Upper bound on composite drift when only the weights change:
// (alpha_M + alpha_C + alpha_R) * 3*delta, clipped to [0,1]. Only the three
// topic-aggregated components depend on the weights.
double drift_bound(double delta, const WeightVector& alpha);

// The blueprint-literal ceiling 3*delta, exposed alongside the scaled bound.
double drift_bound_raw(double delta);

}  // namespace eri
