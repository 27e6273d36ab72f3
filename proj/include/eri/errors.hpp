#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eri {

// Malformed input bytes (bad JSON, bad JSONL line). Message carries the
// line/field location when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally well-formed input that violates one or more invariants.
// Carries every violation found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "validation failed:";
    for (const auto& s : issues) {
      out += "\n  - ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

// Argument outside an operation's stated domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Weight-design feasibility pre-solve found an empty feasible region.
// `certificate` is a subset of constraint indices whose intersection with
// the simplex is already empty.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& msg, std::vector<int> certificate)
      : std::runtime_error(msg), certificate_(std::move(certificate)) {}

  const std::vector<int>& certificate() const { return certificate_; }

 private:
  std::vector<int> certificate_;
};

}  // namespace eri
