#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trialg {

struct Violation {
  std::string axiom;
  std::vector<std::string> tuple;
  std::string lhs;
  std::string rhs;
};

/// Outcome of an exhaustive (or sampled) identity sweep.
struct AxiomReport {
  std::string subject;
  std::vector<std::string> axioms_checked;
  std::map<std::string, std::uint64_t> tuples_per_axiom;
  std::uint64_t tuples_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // the first few, in sweep order
  bool exhaustive = true;
  std::optional<unsigned> degree_cap;
  std::string scope;

  [[nodiscard]] bool passed() const { return violation_count == 0; }
  void count(const std::string& axiom, std::uint64_t n = 1);
  void add_violation(Violation v, std::size_t max_witnesses);
  void merge(const AxiomReport& other, std::size_t max_witnesses);
  [[nodiscard]] std::string summary() const;
};

}  // namespace trialg
