#include "trialg/catalog/registry.hpp"

#include <stdexcept>

#include "trialg/catalog/finite_families.hpp"
#include "trialg/catalog/grassmann.hpp"
#include "trialg/catalog/polynomial_families.hpp"
#include "trialg/superpoly/poisson.hpp"

namespace trialg {

namespace {

unsigned need(const std::optional<unsigned>& v, unsigned fallback) { return v.value_or(fallback); }

Rational scalar_phi(const Matrix& m) {
  if (m.rows() != 1 || m.cols() != 1) throw std::invalid_argument("sw3: phi must be a scalar");
  return m(0, 0);
}

}  // namespace

std::vector<std::string> family_names() {
  return {"o3", "a3t", "a3st", "star", "c3", "c3star", "grassmann-n5", "p3", "sw3", "s3", "w3"};
}

bool is_finite_family(const std::string& f) {
  return f == "o3" || f == "a3t" || f == "a3st" || f == "star" || f == "c3" || f == "c3star" || f == "grassmann-n5";
}

Structure build_family(const FamilyParams& p) {
  const std::string& f = p.family;
  if (f == "o3") return o3();
  if (f == "a3t") return a3_t(need(p.m, 2), need(p.n, 2));
  if (f == "a3st") return a3_st(need(p.h, 1), need(p.k, 1));
  if (f == "star") {
    if (!p.hmat || !p.kmat) throw std::invalid_argument("star: --hmat and --kmat are required");
    return star_bracket(*p.hmat, *p.kmat);
  }
  if (f == "c3") return c3(need(p.n, 1));
  if (f == "c3star") {
    if (!p.hmat || !p.kmat) throw std::invalid_argument("c3star: --hmat and --kmat are required");
    return c3_star(*p.hmat, *p.kmat);
  }
  if (f == "grassmann-n5") return grassmann_n5(need(p.k, 1)).algebra;
  if (f == "p3") {
    const unsigned m = need(p.m, 1);
    if (!p.phi) return p3(m);
    return p3(m, LinearChange{*p.phi, Matrix(0, 0)});
  }
  if (f == "sw3") {
    if (!p.a && !p.phi) return sw3();
    return sw3(p.a.value_or(Matrix{{0, 1}, {-1, 0}}), p.phi ? scalar_phi(*p.phi) : Rational(-1));
  }
  if (f == "s3") return p.phi ? s3(*p.phi) : s3();
  if (f == "w3") return p.phi ? w3(*p.phi) : w3();
  throw std::invalid_argument("unknown family '" + f + "'");
}

TriEvaluator evaluator_from_params(const std::string& family, const std::map<std::string, std::string>& params) {
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return it->second;
  };
  FamilyParams p;
  p.family = family;
  if (auto m = get("m")) p.m = static_cast<unsigned>(std::stoul(*m));
  if (auto a = get("a")) p.a = Matrix::parse(*a);
  if (auto phi = get("phi")) p.phi = Matrix::parse(*phi);
  if (is_finite_family(family)) throw std::invalid_argument("'" + family + "' is not an evaluator family");
  return std::get<TriEvaluator>(build_family(p));
}

std::vector<FamilyParams> finite_catalog() {
  std::vector<FamilyParams> out;
  out.push_back({.family = "o3"});
  out.push_back({.family = "a3t", .m = 1, .n = 2});
  out.push_back({.family = "a3t", .m = 2, .n = 2});
  out.push_back({.family = "a3t", .m = 2, .n = 3});
  out.push_back({.family = "a3st", .h = 1, .k = 1});
  out.push_back({.family = "star", .hmat = Matrix{{2, 1}, {1, 1}}, .kmat = Matrix{{1, 0}, {0, 3}}});
  out.push_back({.family = "c3", .n = 1});
  out.push_back({.family = "c3", .n = 2});
  out.push_back({.family = "c3star", .hmat = Matrix{{4, 0}, {0, Rational(1) / 4}}, .kmat = Matrix{{2, 1}, {1, 1}}});
  out.push_back({.family = "grassmann-n5", .k = 1});
  out.push_back({.family = "grassmann-n5", .k = 2});
  return out;
}

std::string structure_name(const Structure& s) {
  return std::visit([](const auto& x) { return x.name(); }, s);
}

}  // namespace trialg
