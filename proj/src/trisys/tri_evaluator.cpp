#include "trialg/trisys/tri_evaluator.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace trialg {

namespace {

struct MonoKey {
  std::size_t component;
  Monomial mono;
  friend auto operator<=>(const MonoKey&, const MonoKey&) = default;
  friend bool operator==(const MonoKey&, const MonoKey&) = default;
};

class EvaluatorSession final : public BracketSession {
 public:
  EvaluatorSession(const TriEvaluator& ev, unsigned cap) : ev_(ev) {
    const auto monos = monomials_up_to(*ev.universe(), cap);
    for (std::size_t c = 0; c < ev.components().size(); ++c)
      for (const auto& m : monos) intern({c, m});
    test_size_ = static_cast<std::uint32_t>(keys_.size());
  }

  std::uint32_t test_size() const override { return test_size_; }

  const SparseVec& bracket(std::uint32_t i, std::uint32_t j, std::uint32_t k) override {
    if (i >= (1u << 21) || j >= (1u << 21) || k >= (1u << 21))
      throw std::length_error("evaluator session: too many monomials");
    const std::uint64_t key = (std::uint64_t{i} << 42) | (std::uint64_t{j} << 21) | k;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Element r = ev_.bracket(element(i), element(j), element(k));
    SparseVec v;
    for (std::size_t c = 0; c < r.size(); ++c)
      for (const auto& [m, coef] : r[c].terms()) v.entries.emplace_back(intern({c, m}), coef);
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return cache_.emplace(key, std::move(v)).first->second;
  }

  std::string label(std::uint32_t id) override {
    const MonoKey& k = keys_.at(id);
    Element e = ev_.embed(k.component, SuperPoly::term(ev_.universe(), k.mono));
    return ev_.str(e);
  }

 private:
  std::uint32_t intern(const MonoKey& k) {
    auto [it, inserted] = ids_.try_emplace(k, static_cast<std::uint32_t>(keys_.size()));
    if (inserted) keys_.push_back(k);
    return it->second;
  }

  Element element(std::uint32_t id) const {
    const MonoKey& k = keys_.at(id);
    return ev_.embed(k.component, SuperPoly::term(ev_.universe(), k.mono));
  }

  const TriEvaluator& ev_;
  std::map<MonoKey, std::uint32_t> ids_;
  std::vector<MonoKey> keys_;
  std::uint32_t test_size_ = 0;
  std::unordered_map<std::uint64_t, SparseVec> cache_;
};

}  // namespace

TriEvaluator::TriEvaluator(std::string name, UniversePtr universe,
                           std::vector<std::string> components, BracketFn bracket)
    : name_(std::move(name)),
      universe_(std::move(universe)),
      components_(std::move(components)),
      bracket_(std::move(bracket)) {
  if (components_.empty()) throw std::invalid_argument("TriEvaluator: no components");
}

std::unique_ptr<BracketSession> TriEvaluator::open_session(unsigned degree_cap) const {
  return std::make_unique<EvaluatorSession>(*this, degree_cap);
}

Element TriEvaluator::zero() const { return Element(components_.size(), SuperPoly(universe_)); }

Element TriEvaluator::embed(std::size_t c, const SuperPoly& poly) const {
  Element e = zero();
  e.at(c) = poly;
  return e;
}

Element TriEvaluator::bracket(const Element& x, const Element& y, const Element& z) const {
  const std::size_t n = components_.size();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw std::invalid_argument(name_ + ": element has the wrong number of components");
  Element r = bracket_(x, y, z);
  for (auto& p : r)
    if (!p.universe()) p = SuperPoly(universe_);
  return r;
}

std::vector<Element> TriEvaluator::test_basis(unsigned cap) const {
  std::vector<Element> out;
  const auto monos = monomials_up_to(*universe_, cap);
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (const auto& m : monos) out.push_back(embed(c, SuperPoly::term(universe_, m)));
  return out;
}

std::string TriEvaluator::str(const Element& e) const {
  if (components_.size() == 1) return e.at(0).str();
  std::string s;
  for (std::size_t c = 0; c < e.size(); ++c) {
    if (e[c].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + e[c].str() + ")<" + components_[c] + ">";
  }
  return s.empty() ? "0" : s;
}

bool elements_equal(const Element& a, const Element& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace trialg
