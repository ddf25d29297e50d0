#include "trialg/trisys/simplicity.hpp"

#include <deque>

namespace trialg {

namespace {

// Envelope dimension over F_p for p = 2^61 - 1. The span of words reduced mod p has
// dimension at most the rational one, so reaching n^2 here certifies fullness over Q.
constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kP), hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kP ? s - kP : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> to_mod(const Rational& q) {
  mpz_class p(std::to_string(kP));
  mpz_class n = q.numerator() % p, d = q.denominator() % p;
  if (n < 0) n += p;
  if (d == 0) return std::nullopt;
  std::uint64_t nn = std::stoull(n.get_str()), dd = std::stoull(d.get_str());
  return mulmod(nn, powmod(dd, kP - 2));
}

using ModVec = std::vector<std::uint64_t>;

class ModEchelon {
 public:
  explicit ModEchelon(std::size_t n) : n_(n) {}
  bool insert(ModVec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t c = v[piv_[r]];
      if (!c) continue;
      const ModVec& row = rows_[r];
      for (std::size_t j = 0; j < n_; ++j)
        if (row[j]) v[j] = (v[j] + kP - mulmod(c, row[j])) % kP;
    }
    std::size_t p = 0;
    while (p < n_ && !v[p]) ++p;
    if (p == n_) return false;
    std::uint64_t inv = powmod(v[p], kP - 2);
    for (auto& x : v) x = mulmod(x, inv);
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  std::size_t dim() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<ModVec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace

std::optional<std::size_t> envelope_dim_mod_p(const std::vector<Matrix>& gens, std::size_t n) {
  std::vector<ModVec> g;
  for (const auto& m : gens) {
    ModVec v(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      auto x = to_mod(m.flat()[i]);
      if (!x) return std::nullopt;
      v[i] = *x;
    }
    g.push_back(std::move(v));
  }
  ModEchelon ech(n * n);
  std::deque<ModVec> work;
  ModVec id(n * n);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  ech.insert(id);
  work.push_back(id);
  while (!work.empty() && ech.dim() < n * n) {
    ModVec x = std::move(work.front());
    work.pop_front();
    for (const auto& a : g) {
      ModVec y(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          std::uint64_t ail = a[i * n + l];
          if (!ail) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (x[l * n + k]) y[i * n + k] = (y[i * n + k] + mulmod(ail, x[l * n + k])) % kP;
        }
      if (ech.insert(y)) work.push_back(std::move(y));
    }
  }
  return ech.dim();
}

std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "Simple";
    case Simplicity::NotSimple: return "NotSimple";
    case Simplicity::Degenerate: return "Degenerate";
    case Simplicity::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Subspace associative_envelope(const std::vector<Matrix>& gens, std::size_t n) {
  Subspace env(n * n);
  std::deque<Matrix> work;
  Matrix id = Matrix::identity(n);
  env.insert(id.flat());
  work.push_back(id);
  while (!work.empty() && !env.is_full()) {
    Matrix x = std::move(work.front());
    work.pop_front();
    for (const auto& a : gens) {
      Matrix y = a * x;
      if (env.insert(y.flat())) work.push_back(std::move(y));
    }
  }
  return env;
}

std::optional<Subspace> find_invariant_subspace(const std::vector<Matrix>& ops, std::size_t n,
                                                const Subspace& envelope) {
  auto proper = [n](const Subspace& s) { return !s.is_zero() && s.dim() < n; };
  std::vector<std::vector<Vector>> seed_sets;
  for (std::size_t i = 0; i < n; ++i) seed_sets.push_back({unit_vector(n, i)});
  // Common kernel and joint image are invariant whenever they are proper.
  {
    Matrix stacked(ops.size() * n, n);
    for (std::size_t r = 0; r < ops.size(); ++r) stacked.set_block(r * n, 0, ops[r]);
    auto ker = nullspace(stacked);
    if (!ker.empty()) seed_sets.push_back(ker);
    std::vector<Vector> img;
    for (const auto& op : ops)
      for (std::size_t j = 0; j < n; ++j) img.push_back(op.col(j));
    seed_sets.push_back(img);
  }
  for (const auto& b : envelope.basis()) {
    Matrix e = Matrix::from_flat(n, n, b);
    std::size_t r = rank(e);
    if (r == 0 || r == n) continue;
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(e.col(j));
    seed_sets.push_back(cols);
  }
  for (const auto& seeds : seed_sets) {
    Subspace s = subspace_close(n, seeds, ops);
    if (proper(s)) return s;
  }
  return std::nullopt;
}

SimplicityResult simplicity(const TriAlgebra& t) {
  const std::size_t n = t.dim();
  SimplicityResult out;
  if (t.is_zero_bracket()) {
    out.verdict = Simplicity::Degenerate;
    out.note = "all brackets vanish";
    return out;
  }
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = t.left_op(i, j);
      if (!l.is_zero()) ops.push_back(std::move(l));
    }
  if (auto d = envelope_dim_mod_p(ops, n); d && *d == n * n) {
    out.verdict = Simplicity::Simple;
    out.envelope_dim = n * n;
    out.note = "associative envelope of the L operators is the full matrix algebra";
    return out;
  }
  Subspace env = associative_envelope(ops, n);
  out.envelope_dim = env.dim();
  if (env.is_full()) {
    out.verdict = Simplicity::Simple;
    out.note = "associative envelope of the L operators is the full matrix algebra";
    return out;
  }
  if (auto w = find_invariant_subspace(ops, n, env)) {
    out.verdict = Simplicity::NotSimple;
    out.note = "proper common invariant subspace of dimension " + std::to_string(w->dim());
    out.witness = std::move(w);
    return out;
  }
  out.verdict = Simplicity::Inconclusive;
  out.note = "no invariant subspace found but the envelope has dimension " +
             std::to_string(env.dim()) + " < " + std::to_string(n * n) +
             "; irreducibility may depend on the field";
  return out;
}

}  // namespace trialg
