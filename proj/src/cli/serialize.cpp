#include "trialg/cli/serialize.hpp"

#include <fstream>
#include <sstream>

#include "trialg/catalog/registry.hpp"

namespace trialg {

using nlohmann::json;

namespace {

json sparse_to_json(const SparseVec& v) {
  json o = json::object();
  for (const auto& [id, c] : v.entries) o[std::to_string(id)] = c.str();
  return o;
}

SparseVec sparse_from_json(const json& o, std::size_t dim) {
  if (!o.is_object()) throw ParseError("bracket value must be an object");
  std::vector<std::pair<std::uint32_t, Rational>> entries;
  for (const auto& [key, val] : o.items()) {
    std::size_t id = 0;
    try {
      id = std::stoul(key);
    } catch (const std::exception&) {
      throw ParseError("bad component index '" + key + "'");
    }
    if (id >= dim) throw ParseError("component index out of range: " + key);
    if (!val.is_string()) throw ParseError("rational entries must be strings");
    Rational c;
    try {
      c = Rational::parse(val.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + val.get<std::string>() + "'");
    }
    if (!c.is_zero()) entries.emplace_back(static_cast<std::uint32_t>(id), c);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return SparseVec{std::move(entries)};
}

std::vector<std::size_t> parse_key(const std::string& key, std::size_t arity, std::size_t dim) {
  std::vector<std::size_t> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoul(part));
    } catch (const std::exception&) {
      throw ParseError("bad bracket key '" + key + "'");
    }
  }
  if (out.size() != arity) throw ParseError("bracket key '" + key + "' has the wrong arity");
  for (auto i : out)
    if (i >= dim) throw ParseError("bracket key '" + key + "' out of range");
  return out;
}

std::string join_key(std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

json to_json(const TriAlgebra& t) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "trialgebra";
  j["name"] = t.name();
  j["dim"] = t.dim();
  j["labels"] = t.basis_labels();
  json br = json::object();
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (const auto& v = t.at(a, b, c); !v.is_zero()) br[join_key({a, b, c})] = sparse_to_json(v);
  j["bracket"] = std::move(br);
  return j;
}

json to_json(const SuperAlgebra& g, const GradedConjugation* sigma) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "superlie";
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["labels"] = g.labels();
  j["degrees"] = g.degrees();
  j["parities"] = g.parities();
  json br = json::object();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b)
      if (const auto& v = g.at(a, b); !v.is_zero()) br[join_key({a, b})] = sparse_to_json(v);
  j["bracket"] = std::move(br);
  if (sigma) {
    json m = json::object();
    for (std::size_t r = 0; r < sigma->map.rows(); ++r)
      for (std::size_t c = 0; c < sigma->map.cols(); ++c)
        if (!sigma->map(r, c).is_zero()) m[join_key({r, c})] = sigma->map(r, c).str();
    j["conjugation"] = {{"matrix", std::move(m)}};
  }
  return j;
}

json to_json(const TriEvaluator& e) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "evaluator";
  j["name"] = e.name();
  j["family"] = e.family;
  j["params"] = e.params;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Loaded from_json(const json& j) {
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (field<std::string>(j, "schema") != kSchema) throw ParseError("unsupported schema");
  const std::string kind = field<std::string>(j, "kind");
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  if (kind == "evaluator") {
    auto params = j.contains("params") ? field<std::map<std::string, std::string>>(j, "params")
                                       : std::map<std::string, std::string>{};
    try {
      return evaluator_from_params(field<std::string>(j, "family"), params);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  const std::size_t dim = field<std::size_t>(j, "dim");
  auto labels = j.contains("labels") ? field<std::vector<std::string>>(j, "labels") : std::vector<std::string>{};
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != dim) throw ParseError("labels do not match dim");
  const json br = j.contains("bracket") ? j.at("bracket") : json::object();
  if (!br.is_object()) throw ParseError("bracket must be an object");
  if (kind == "trialgebra") {
    TriAlgebra t(name, labels);
    for (const auto& [key, val] : br.items()) {
      auto idx = parse_key(key, 3, dim);
      t.set(idx[0], idx[1], idx[2], sparse_from_json(val, dim));
    }
    return t;
  }
  if (kind == "superlie") {
    auto degrees = field<std::vector<int>>(j, "degrees");
    auto parities = field<std::vector<int>>(j, "parities");
    if (degrees.size() != dim || parities.size() != dim) throw ParseError("degrees/parities do not match dim");
    SuperFile f{SuperAlgebra(name, labels, degrees, parities), std::nullopt};
    for (const auto& [key, val] : br.items()) {
      auto idx = parse_key(key, 2, dim);
      f.algebra.set(idx[0], idx[1], sparse_from_json(val, dim));
    }
    if (j.contains("conjugation")) {
      const json& m = j.at("conjugation").at("matrix");
      Matrix s(dim, dim);
      for (const auto& [key, val] : m.items()) {
        auto idx = parse_key(key, 2, dim);
        if (!val.is_string()) throw ParseError("rational entries must be strings");
        s(idx[0], idx[1]) = Rational::parse(val.get<std::string>());
      }
      f.sigma = GradedConjugation{s};
    }
    return f;
  }
  throw ParseError("unknown kind '" + kind + "'");
}

Loaded parse_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

Loaded load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

void save_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace trialg
