#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eri {

class Blueprint;

// Component indices, fixed everywhere: Mastery, Coverage, Retention, Pace,
// Volatility, Endurance.
enum Component : int { kM = 0, kC = 1, kR = 2, kP = 3, kV = 4, kE = 5 };
inline constexpr int kNumComponents = 6;
inline constexpr std::array<const char*, 6> kComponentNames = {"M", "C", "R",
                                                               "P", "V", "E"};

// The six normalized readiness signals, each in [0,1].
struct ComponentVector {
  std::array<double, 6> values{};
  std::int64_t as_of = 0;

  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  // Empty if valid, else one message per out-of-range component.
  std::vector<std::string> check() const;
};

// Composite weights on the 5-simplex.
struct WeightVector {
  std::array<double, 6> alpha{};

  double operator[](int i) const { return alpha[static_cast<std::size_t>(i)]; }
  std::vector<std::string> check() const;

  static WeightVector uniform();
};

struct TopicComponents {
  std::string topic_id;
  double weight = 0.0;
  double mastery = 0.0;
  double coverage = 0.0;
  double retention = 0.0;
  std::int64_t attempts = 0;
  // Days since last successful retrieval; empty when there is none.
  std::optional<double> days_since_success;
};

struct TopicBreakdown {
  std::vector<TopicComponents> topics;  // blueprint order
};

// Linear composite readiness index, Eq-style convex combination.
// Throws DomainError if either argument violates its invariants.
double eri_score(const ComponentVector& x, const WeightVector& alpha);

// Composite sensitivity constant: convex combination of the per-component
// constants with the weights.
double lipschitz_constant(const WeightVector& alpha,
                          const std::array<double, 6>& per_component);

// Per-component sensitivity constants w.r.t. the dominating log metric
// (see events::log_distance). M's value of 2 is an empirically validated
// working constant; the rest are calibrated with margin by the test suite.
std::array<double, 6> default_lipschitz_constants();

struct ValidityProbe {
  std::array<double, 6> delta{};  // coordinatewise, must be >= 0
};

struct ValidityReport {
  bool ok = true;
  std::vector<std::string> violations;      // bound/monotonicity breaches
  std::vector<std::string> rejected_probes; // probes with negative entries
  // Renormalized directional derivative of the composite w.r.t. each topic
  // weight, holding that topic's component values fixed. Informational: a
  // below-average topic legitimately has a negative entry.
  std::vector<std::pair<std::string, double>> weight_derivatives;
};

// Numeric validity diagnostics: bounds, coordinatewise monotonicity under
// the given probes, and (when a blueprint and breakdown are supplied) the
// per-topic weight sensitivity.
ValidityReport check_validity(const ComponentVector& x,
                              const WeightVector& alpha,
                              const std::vector<ValidityProbe>& probes,
                              const Blueprint* bp = nullptr,
                              const TopicBreakdown* breakdown = nullptr);

}  // namespace eri
