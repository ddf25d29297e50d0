#pragma once

#include <string>
#include <vector>

#include "trialg/exactcore/linalg.hpp"
#include "trialg/trisys/report.hpp"
#include "trialg/trisys/simplicity.hpp"
#include "trialg/trisys/sparse_vec.hpp"

namespace trialg {

/// Z-graded Lie superalgebra on a homogeneous basis, given by structure constants.
class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  SuperAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> degrees,
               std::vector<int> parities);

  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] int degree(std::size_t i) const { return degrees_.at(i); }
  [[nodiscard]] int parity(std::size_t i) const { return parities_.at(i); }
  [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
  [[nodiscard]] const std::vector<int>& parities() const { return parities_; }
  [[nodiscard]] std::vector<std::size_t> indices_of_degree(int d) const;
  [[nodiscard]] std::size_t component_dim(int d) const { return indices_of_degree(d).size(); }

  [[nodiscard]] const SparseVec& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, SparseVec v);
  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y -> [e_i, y].
  [[nodiscard]] Matrix ad(std::size_t i) const;
  [[nodiscard]] bool is_abelian() const;

  /// Tensor, degree and parity equality.
  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<int> parities_;
  std::vector<SparseVec> table_;
};

/// A degree-reversing linear map, as a full matrix on the algebra's basis.
struct GradedConjugation {
  Matrix map;
};

/// Super-antisymmetry on basis pairs and the super-Jacobi identity on basis triples.
AxiomReport check_super_jacobi(const SuperAlgebra& g, std::size_t max_witnesses = 5);

/// parity = degree mod 2 for every basis element.
bool check_consistency(const SuperAlgebra& g);
/// Degrees lie in {-1, 0, 1}.
bool check_shortness(const SuperAlgebra& g);
/// [g_a, g_b] lies in g_{a+b} (zero when that degree is absent).
bool check_grading(const SuperAlgebra& g);

/// Automorphism, degree reversal, and sigma^2 = (-1)^k on degree k.
AxiomReport verify_conjugation(const SuperAlgebra& g, const GradedConjugation& s,
                               std::size_t max_witnesses = 5);

/// No nonzero element of degree >= 0 brackets L_-1 to zero.
bool check_transitivity(const SuperAlgebra& g);
/// [L_-1, L_1] = L_0.
bool check_generation(const SuperAlgebra& g);
/// The graded ideal generated by any basis element meets L_-1 and L_1.
bool check_ideal_property(const SuperAlgebra& g);

/// Smallest ad-stable subspace containing the seeds.
Subspace generated_ideal(const SuperAlgebra& g, const std::vector<Vector>& seeds);

/// Burnside certificate on {ad e_i}; NotSimple carries a proper ideal when one is found.
SimplicityResult superalgebra_simplicity(const SuperAlgebra& g);

}  // namespace trialg
