#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "trialg/superlie/super_algebra.hpp"
#include "trialg/trisys/tri_algebra.hpp"
#include "trialg/trisys/tri_evaluator.hpp"

namespace trialg {

inline constexpr const char* kSchema = "trialg/structure-constants/v1";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuperFile {
  SuperAlgebra algebra;
  std::optional<GradedConjugation> sigma;
};

using Loaded = std::variant<TriAlgebra, TriEvaluator, SuperFile>;

nlohmann::json to_json(const TriAlgebra& t);
nlohmann::json to_json(const SuperAlgebra& g, const GradedConjugation* sigma = nullptr);
nlohmann::json to_json(const TriEvaluator& e);

/// Two-space indented, newline-terminated. Keys come out sorted.
std::string dump(const nlohmann::json& j);

/// Throws ParseError on schema or content errors; unknown fields are ignored.
Loaded from_json(const nlohmann::json& j);
Loaded parse_text(const std::string& text);
Loaded load_file(const std::string& path);
void save_file(const std::string& path, const std::string& text);

}  // namespace trialg
