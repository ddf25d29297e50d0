#include "trialg/trisys/axioms.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

namespace trialg {

namespace {

struct TripleTerm {
  int sign;
  std::array<int, 3> perm;  // positions of (u, v, w)
};

struct TripleIdentity {
  std::string name;
  std::vector<TripleTerm> terms;  // sum of terms = 0; the first term is reported as lhs
};

/// [u,v,[x,y,z]] = [[u,v,x],y,z] + mid * [x,[a,b,y],z] + [x,y,[u,v,z]]
/// with (a,b) = (v,u) when `swapped`, else (u,v).
struct FundamentalIdentity {
  std::string name;
  int mid_sign;
  bool swapped;
};

struct Axioms {
  std::vector<TripleIdentity> triples;
  FundamentalIdentity fi;
};

class Sweeper {
 public:
  Sweeper(BracketSession& s, const Axioms& ax, const SweepOptions& opt, AxiomReport& rep)
      : s_(s), ax_(ax), opt_(opt), rep_(rep) {}

  void triple(const TripleIdentity& id, std::uint32_t u, std::uint32_t v, std::uint32_t w) {
    const std::array<std::uint32_t, 3> a{u, v, w};
    for (const auto& t : id.terms)
      acc_.add_scaled(s_.bracket(a[t.perm[0]], a[t.perm[1]], a[t.perm[2]]), Rational(t.sign));
    rep_.count(id.name);
    if (acc_.is_zero()) {
      acc_.clear();
      return;
    }
    acc_.clear();
    const auto& first = id.terms.front();
    acc_.add_scaled(s_.bracket(a[first.perm[0]], a[first.perm[1]], a[first.perm[2]]), Rational(first.sign));
    SparseVec lhs = acc_.take();
    for (std::size_t i = 1; i < id.terms.size(); ++i) {
      const auto& t = id.terms[i];
      acc_.add_scaled(s_.bracket(a[t.perm[0]], a[t.perm[1]], a[t.perm[2]]), Rational(-t.sign));
    }
    SparseVec rhs = acc_.take();
    rep_.add_violation({id.name, {s_.label(u), s_.label(v), s_.label(w)}, fmt(lhs), fmt(rhs)},
                       opt_.max_witnesses);
  }

  void fundamental(std::uint32_t u, std::uint32_t v, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const SparseVec& mid = ax_.fi.swapped ? s_.bracket(v, u, y) : s_.bracket(u, v, y);
    rep_.count(ax_.fi.name);
    if (!fi_holds(u, v, x, y, z, mid)) fi_violation(u, v, x, y, z, mid);
  }

  /// Exhaustive sweep of the fundamental identity for u in [u0, u1).
  void fundamental_block(std::uint32_t u0, std::uint32_t u1) {
    const std::uint32_t n = s_.test_size();
    const FundamentalIdentity& fi = ax_.fi;
    for (std::uint32_t u = u0; u < u1; ++u)
      for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t x = 0; x < n; ++x)
          for (std::uint32_t y = 0; y < n; ++y) {
            const SparseVec& mid = fi.swapped ? s_.bracket(v, u, y) : s_.bracket(u, v, y);
            for (std::uint32_t z = 0; z < n; ++z)
              if (!fi_holds(u, v, x, y, z, mid)) fi_violation(u, v, x, y, z, mid);
          }
    const std::uint64_t per_u = std::uint64_t{n} * n * n * n;
    rep_.count(fi.name, per_u * (u1 - u0));
  }

 private:
  bool fi_holds(std::uint32_t u, std::uint32_t v, std::uint32_t x, std::uint32_t y, std::uint32_t z,
                const SparseVec& mid) {
    fi_terms(u, v, x, y, z, mid, true, true);
    const bool ok = acc_.is_zero();
    acc_.clear();
    return ok;
  }

  void fi_violation(std::uint32_t u, std::uint32_t v, std::uint32_t x, std::uint32_t y, std::uint32_t z,
                    const SparseVec& mid) {
    fi_terms(u, v, x, y, z, mid, true, false);
    SparseVec lhs = acc_.take();
    fi_terms(u, v, x, y, z, mid, false, true);
    SparseVec rhs = acc_.take();  // holds -rhs
    for (auto& e : rhs.entries) e.second = -e.second;
    rep_.add_violation({ax_.fi.name, {s_.label(u), s_.label(v), s_.label(x), s_.label(y), s_.label(z)},
                        fmt(lhs), fmt(rhs)},
                       opt_.max_witnesses);
  }

  std::string fmt(const SparseVec& v) {
    return v.str([this](std::uint32_t id) { return s_.label(id); });
  }

  // Adds lhs and/or minus rhs of the fundamental identity into acc_.
  void fi_terms(std::uint32_t u, std::uint32_t v, std::uint32_t x, std::uint32_t y, std::uint32_t z,
                const SparseVec& mid, bool with_lhs, bool with_rhs) {
    const SparseVec& xyz = s_.bracket(x, y, z);
    if (with_lhs)
      for (const auto& [c, a] : xyz.entries) acc_.add_scaled(s_.bracket(u, v, c), a);
    if (!with_rhs) return;
    const SparseVec& uvx = s_.bracket(u, v, x);
    for (const auto& [c, a] : uvx.entries) acc_.sub_scaled(s_.bracket(c, y, z), a);
    const Rational ms(ax_.fi.mid_sign);
    for (const auto& [c, a] : mid.entries) acc_.sub_scaled(s_.bracket(x, c, z), ms * a);
    const SparseVec& uvz = s_.bracket(u, v, z);
    for (const auto& [c, a] : uvz.entries) acc_.sub_scaled(s_.bracket(x, y, c), a);
  }

  BracketSession& s_;
  const Axioms& ax_;
  const SweepOptions& opt_;
  AxiomReport& rep_;
  Accumulator acc_;
};

AxiomReport run(const TriSystem& sys, const Axioms& ax, const SweepOptions& opt, const char* family) {
  AxiomReport rep;
  rep.subject = sys.name();
  for (const auto& t : ax.triples) rep.axioms_checked.push_back(t.name);
  rep.axioms_checked.push_back(ax.fi.name);
  auto session = sys.open_session(opt.degree_cap);
  const std::uint32_t n = session->test_size();
  if (sys.is_finite()) {
    if (n > opt.max_dim && !opt.sample)
      throw GuardrailError(sys.name() + ": dimension " + std::to_string(n) +
                           " exceeds the sweep guardrail " + std::to_string(opt.max_dim) +
                           " (sample, or raise TRIALG_MAX_DIM)");
    rep.scope = std::string(family) + " identities on all basis tuples; conclusive by multilinearity";
  } else {
    rep.degree_cap = opt.degree_cap;
    rep.scope = std::string(family) + " identities on all monomial tuples of degree <= " +
                std::to_string(opt.degree_cap) + " (" + std::to_string(n) +
                " test monomials); the claim covers the subspace they span";
  }

  Sweeper main(*session, ax, opt, rep);
  if (opt.sample) {
    rep.exhaustive = false;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n ? n - 1 : 0);
    if (n)
      for (std::uint64_t s = 0; s < *opt.sample; ++s) {
        for (const auto& t : ax.triples) main.triple(t, pick(rng), pick(rng), pick(rng));
        std::uint32_t a[5];
        for (auto& q : a) q = pick(rng);
        main.fundamental(a[0], a[1], a[2], a[3], a[4]);
      }
    rep.scope += "; random sample of " + std::to_string(*opt.sample) + " tuples per identity";
    return rep;
  }

  for (const auto& t : ax.triples)
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t w = 0; w < n; ++w) main.triple(t, u, v, w);

  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, n ? n : 1));
  if (threads == 1) {
    main.fundamental_block(0, n);
    return rep;
  }
  std::vector<AxiomReport> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint32_t u0 = n * t / threads, u1 = n * (t + 1) / threads;
    pool.emplace_back([&, t, u0, u1] {
      auto s = sys.open_session(opt.degree_cap);
      Sweeper w(*s, ax, opt, parts[t]);
      w.fundamental_block(u0, u1);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& p : parts) rep.merge(p, opt.max_witnesses);
  return rep;
}

}  // namespace

std::size_t default_max_dim() {
  if (const char* env = std::getenv("TRIALG_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 12;
}

AxiomReport check_n6(const TriSystem& sys, const SweepOptions& opt) {
  static const Axioms ax{{{"N6(a) [u,v,w] = -[w,v,u]", {{1, {0, 1, 2}}, {1, {2, 1, 0}}}}},
                         {"N6(b) fundamental identity", -1, true}};
  return run(sys, ax, opt, "N=6");
}

AxiomReport check_n8(const TriSystem& sys, const SweepOptions& opt) {
  static const Axioms ax{{{"N8(a) [u,v,w] = -[v,u,w]", {{1, {0, 1, 2}}, {1, {1, 0, 2}}}},
                          {"N8(a) [u,v,w] = -[u,w,v]", {{1, {0, 1, 2}}, {1, {0, 2, 1}}}}},
                         {"N8(b) fundamental identity", 1, false}};
  return run(sys, ax, opt, "N=8");
}

AxiomReport check_n5(const TriSystem& sys, const SweepOptions& opt) {
  static const Axioms ax{{{"N5(a) [u,v,w] = [v,u,w]", {{1, {0, 1, 2}}, {-1, {1, 0, 2}}}},
                          {"N5(c) [u,v,w] + [v,w,u] + [w,u,v] = 0",
                           {{1, {0, 1, 2}}, {1, {1, 2, 0}}, {1, {2, 0, 1}}}}},
                         {"N5(b) derivation identity", 1, false}};
  return run(sys, ax, opt, "N=5");
}

}  // namespace trialg
