#include "trialg/trisys/report.hpp"

#include <sstream>

namespace trialg {

void AxiomReport::count(const std::string& axiom, std::uint64_t n) {
  tuples_per_axiom[axiom] += n;
  tuples_checked += n;
}

void AxiomReport::add_violation(Violation v, std::size_t max_witnesses) {
  ++violation_count;
  if (violations.size() < max_witnesses) violations.push_back(std::move(v));
}

void AxiomReport::merge(const AxiomReport& other, std::size_t max_witnesses) {
  for (const auto& [a, n] : other.tuples_per_axiom) tuples_per_axiom[a] += n;
  tuples_checked += other.tuples_checked;
  violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (violations.size() >= max_witnesses) break;
    violations.push_back(v);
  }
  exhaustive = exhaustive && other.exhaustive;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << subject << ": " << (passed() ? "PASS" : "FAIL") << " (";
  for (std::size_t i = 0; i < axioms_checked.size(); ++i) os << (i ? ", " : "") << axioms_checked[i];
  os << "), " << tuples_checked << " tuples " << (exhaustive ? "(exhaustive" : "(sampled");
  if (degree_cap) os << ", degree cap " << *degree_cap;
  os << "), " << violation_count << " violations";
  if (!scope.empty()) os << "\n  scope: " << scope;
  for (const auto& v : violations) {
    os << "\n  " << v.axiom << " at (";
    for (std::size_t i = 0; i < v.tuple.size(); ++i) os << (i ? ", " : "") << v.tuple[i];
    os << "): lhs = " << v.lhs << ", rhs = " << v.rhs;
  }
  return os.str();
}

}  // namespace trialg
