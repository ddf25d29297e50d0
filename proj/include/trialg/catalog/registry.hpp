#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trialg/trisys/tri_algebra.hpp"
#include "trialg/trisys/tri_evaluator.hpp"

namespace trialg {

/// Family name plus whichever parameters it takes; unset values fall back to defaults.
struct FamilyParams {
  std::string family;
  std::optional<unsigned> m = {}, n = {}, h = {}, k = {};
  std::optional<Matrix> a = {}, hmat = {}, kmat = {}, phi = {};
};

using Structure = std::variant<TriAlgebra, TriEvaluator>;

/// o3, a3t, a3st, star, c3, c3star, grassmann-n5, p3, sw3, s3, w3.
std::vector<std::string> family_names();
bool is_finite_family(const std::string& family);

/// Throws std::invalid_argument on unknown families or invalid parameters.
Structure build_family(const FamilyParams& p);

/// Rebuilds an evaluator from its family tag and serialized parameters.
TriEvaluator evaluator_from_params(const std::string& family, const std::map<std::string, std::string>& params);

/// One small instance of every finite family.
std::vector<FamilyParams> finite_catalog();

std::string structure_name(const Structure& s);

}  // namespace trialg
