#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trialg/superpoly/superpoly.hpp"
#include "trialg/trisys/tri_system.hpp"

namespace trialg {

/// An element of an evaluator-backed system: one polynomial per component.
using Element = std::vector<SuperPoly>;

/// A 3-algebra on (copies of) a polynomial space, given by a bracket function.
class TriEvaluator : public TriSystem {
 public:
  using BracketFn = std::function<Element(const Element&, const Element&, const Element&)>;

  TriEvaluator(std::string name, UniversePtr universe, std::vector<std::string> components,
               BracketFn bracket);

  [[nodiscard]] std::string name() const override { return name_; }
  [[nodiscard]] bool is_finite() const override { return false; }
  [[nodiscard]] std::unique_ptr<BracketSession> open_session(unsigned degree_cap) const override;

  [[nodiscard]] const UniversePtr& universe() const { return universe_; }
  [[nodiscard]] const std::vector<std::string>& components() const { return components_; }

  [[nodiscard]] Element zero() const;
  /// poly placed in component c, other components zero.
  [[nodiscard]] Element embed(std::size_t c, const SuperPoly& poly) const;
  [[nodiscard]] Element bracket(const Element& x, const Element& y, const Element& z) const;
  /// Monomials of degree <= cap in every component, component-major.
  [[nodiscard]] std::vector<Element> test_basis(unsigned cap) const;
  [[nodiscard]] std::string str(const Element& e) const;

  /// Family tag and parameters, kept for serialization.
  std::string family;
  std::map<std::string, std::string> params;

 private:
  std::string name_;
  UniversePtr universe_;
  std::vector<std::string> components_;
  BracketFn bracket_;
};

bool elements_equal(const Element& a, const Element& b);

}  // namespace trialg
