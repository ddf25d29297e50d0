// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 0 only if all pass.
//
// Usage: trialg_acceptance <path-to-trialg-binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "lemma_maps.hpp"
#include "trialg/catalog/finite_families.hpp"
#include "trialg/catalog/grassmann.hpp"
#include "trialg/catalog/o3_identification.hpp"
#include "trialg/catalog/polynomial_families.hpp"
#include "trialg/catalog/registry.hpp"
#include "trialg/cli/serialize.hpp"
#include "trialg/n5bridge/n5bridge.hpp"
#include "trialg/superlie/matrix_models.hpp"
#include "trialg/superlie/palmkvist.hpp"
#include "trialg/trisys/axioms.hpp"
#include "trialg/trisys/intertwiner.hpp"
#include "trialg/trisys/simplicity.hpp"

using namespace trialg;

namespace {

// Pinned tolerances. All arithmetic is exact, so the only tolerance is zero violations;
// the polynomial families are swept up to this degree.
constexpr std::uint64_t kAllowedViolations = 0;
constexpr unsigned kPolyDegreeCap = 3;
constexpr int kLemmaTrials = 3;

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void require(const AxiomReport& r, const std::string& what) {
    require(r.violation_count <= kAllowedViolations && (r.tuples_checked > 0 || r.axioms_checked.empty()),
            what + " (" + r.summary() + ")");
  }
};

SweepOptions poly_opts() {
  SweepOptions o;
  o.degree_cap = kPolyDegreeCap;
  return o;
}

int shell(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void c1(Criterion& c) {
  std::vector<TriAlgebra> ts;
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) ts.push_back(a3_t(m, n));
  ts.push_back(a3_st(1, 1));
  ts.push_back(a3_st(1, 2));
  ts.push_back(c3(1));
  ts.push_back(c3(2));
  for (const auto& t : ts) {
    const AxiomReport r = check_n6(t);
    c.require(r.exhaustive, t.name() + " exhaustive");
    c.require(r, t.name() + " N6");
  }
}

void c2(Criterion& c) {
  auto both = [&](const TriSystem& s, const SweepOptions& o) {
    const AxiomReport n8 = check_n8(s, o);
    c.require(n8, s.name() + " N8");
    if (n8.passed()) c.require(check_n6(s, o), s.name() + " N6 after N8");
  };
  both(o3(), {});
  both(a3_st(1, 1), {});
  both(sw3(Matrix::identity(2), 1), poly_opts());
  both(s3(Matrix::identity(2)), poly_opts());
  both(w3(Matrix::identity(3)), poly_opts());
}

void c3_iso(Criterion& c) {
  const TriAlgebra src = a3_st(1, 1);
  const auto id = identify_o3(src);
  c.require(id.has_value(), "identify_o3(A3(2,2;st))");
  if (!id) return;
  c.require(!id->map.determinant().is_zero(), "intertwiner invertible");
  c.require(id->check, "identification report");
  c.require(check_intertwiner(src, id->target, id->map), "independent re-check of the intertwiner");
  std::ostringstream os;
  os << "target O3 metric " << to_string(id->metric) << " scale " << id->scale << ", signature (" << id->positive
     << "," << id->negative << ")";
  c.notes.push_back(os.str());
}

void c4(Criterion& c) {
  std::mt19937 g(4242);
  auto run = [&](const std::string& tag, const std::function<testing::LemmaInstance()>& make) {
    for (int i = 0; i < kLemmaTrials; ++i) {
      const testing::LemmaInstance inst = make();
      c.require(check_intertwiner(inst.source, inst.target, inst.map), tag + " " + inst.label);
    }
  };
  run("star(2,2)", [&] { return testing::lemma_star(g, 2, 2); });
  run("star(2,3)", [&] { return testing::lemma_star(g, 2, 3); });
  run("plus(1,1)", [&] { return testing::lemma_plus(g, 1, 1); });
  run("plus(1,2)", [&] { return testing::lemma_plus(g, 1, 2); });
  run("c3(1)", [&] { return testing::lemma_c3(g, 1); });
  run("c3(2)", [&] { return testing::lemma_c3(g, 2); });
}

void c5(Criterion& c) {
  const Matrix minus_i = -Matrix::identity(2);
  Matrix d = Matrix::identity(3);
  d(1, 1) = -1;
  d(2, 2) = -1;
  for (const auto& ev : {p3(1), p3(2), sw3(), s3(minus_i), w3(d)}) c.require(check_n6(ev, poly_opts()), ev.name());
}

void c6(Criterion& c) {
  for (const auto& t : {o3(), a3_t(2, 2), a3_t(1, 2), c3(1), a3_st(1, 1)}) {
    const LieConstruction lt = lie_of(t);
    const SuperAlgebra& g = lt.algebra;
    c.require(bracket_from_conjugation(g, lt.sigma) == t, t.name() + " round trip");
    c.require(check_super_jacobi(g), t.name() + " super-Jacobi");
    c.require(check_consistency(g), t.name() + " consistency");
    c.require(check_shortness(g), t.name() + " shortness");
    c.require(check_transitivity(g), t.name() + " transitivity");
    c.require(check_generation(g), t.name() + " generation");
    c.require(check_ideal_property(g), t.name() + " ideal property");
    c.require(verify_conjugation(g, lt.sigma), t.name() + " conjugation");
  }
}

void c7(Criterion& c) {
  const auto o = lie_of(o3());
  c.require(o.sigma_on_l0() == Matrix::identity(o.l0.size()), "sigma|L0 = I for O3");
  const auto a = lie_of(a3_t(2, 2));
  c.require(a.sigma_on_l0() != Matrix::identity(a.l0.size()), "sigma|L0 != I for A3(2,2;t)");
}

void c8(Criterion& c) {
  const MatrixModel sl = sl_model(2, 3), psl = sl_model(2, 2), osp = osp_model(1);
  struct Case {
    const MatrixModel& model;
    GradedConjugation sigma;
    TriAlgebra target;
  };
  const Case cases[] = {{sl, sigma1(sl), a3_t(2, 3)}, {osp, sigma_osp(osp), c3(1)}, {psl, sigma2(psl), a3_st(1, 1)}};
  for (const auto& k : cases) {
    c.require(check_super_jacobi(k.model.algebra), k.model.name + " super-Jacobi");
    const AxiomReport v = verify_conjugation(k.model.algebra, k.sigma);
    c.require(v, k.model.name + " conjugation");
    if (!v.passed()) continue;
    const TriAlgebra t = bracket_from_conjugation(k.model.algebra, k.sigma);
    const auto phi = find_intertwiner(t, k.target);
    c.require(phi.has_value(), k.model.name + " intertwiner to " + k.target.name());
    if (phi) c.require(check_intertwiner(t, k.target, *phi), k.model.name + " intertwiner check");
  }
  c.require(check_sigma1_square(sl), "sigma1^2 = Ad diag(I,-I) on sl(2,3)");
}

void c9(Criterion& c) {
  auto expect = [&](const TriAlgebra& t, Simplicity want) {
    const SimplicityResult r = simplicity(t);
    c.require(r.verdict == want, t.name() + " is " + to_string(r.verdict) + ", want " + to_string(want));
    return r;
  };
  expect(a3_t(2, 2), Simplicity::Simple);
  expect(a3_t(2, 3), Simplicity::Simple);
  expect(c3(1), Simplicity::Simple);
  expect(a3_t(1, 1), Simplicity::Degenerate);
  const TriAlgebra sum = direct_sum(a3_t(2, 2), a3_t(2, 2));
  const SimplicityResult r = expect(sum, Simplicity::NotSimple);
  if (r.verdict == Simplicity::NotSimple) {
    c.require(r.witness.has_value(), "direct sum witness present");
    if (r.witness) {
      const std::size_t d = r.witness->dim();
      c.require(d > 0 && d < sum.dim(), "witness proper and nonzero");
      std::vector<Vector> images;
      for (std::size_t i = 0; i < sum.dim(); ++i)
        for (std::size_t j = 0; j < sum.dim(); ++j)
          for (const Vector& w : r.witness->basis()) images.push_back(sum.left_op(i, j).apply(w));
      bool stable = true;
      for (const Vector& v : images) stable &= r.witness->contains(v);
      c.require(stable, "witness invariant");
    }
  }
  const SimplicityResult s = superalgebra_simplicity(lie_of(a3_t(2, 2)).algebra);
  c.require(s.verdict == Simplicity::Simple, "Lie(A3(2,2;t)) is " + to_string(s.verdict));
}

void c10(Criterion& c) {
  for (unsigned k : {1u, 2u}) {
    const GrassmannN5 g = grassmann_n5(k);
    const std::string tag = "grassmann k=" + std::to_string(k);
    const AxiomReport r = check_n5(g.algebra);
    c.require(r.exhaustive, tag + " exhaustive");
    c.require(r, tag + " N5");
    c.require(check_invariant_form(g.algebra, g.form), tag + " invariant form");
    const SuperAlgebra rec = reconstruct_g(g.algebra);
    c.require(check_super_jacobi(rec), tag + " reconstruct super-Jacobi");
    c.require(n5_from_superalgebra(rec) == g.algebra, tag + " reconstruct round trip");
  }
  const TriAlgebra red = reduce_n6_to_n5(a3_t(2, 2));
  c.require(red.dim() == 8, "reduction dim 8");
  const AxiomReport r = check_n5(red);
  c.require(r.exhaustive, "reduction exhaustive");
  c.require(r, "reduction N5");
  const SuperAlgebra rec = reconstruct_g(red);
  c.require(n5_from_superalgebra(rec) == red, "reduction reconstruct round trip");
}

void c11(Criterion& c, const std::string& binary) {
  for (const auto& p : finite_catalog()) {
    const TriAlgebra t = std::get<TriAlgebra>(build_family(p));
    const std::string text = dump(to_json(t));
    const Loaded back = parse_text(text);
    const auto* u = std::get_if<TriAlgebra>(&back);
    c.require(u && *u == t, t.name() + " tensor round trip");
    c.require(u && dump(to_json(*u)) == text, t.name() + " byte round trip");
    c.require(dump(to_json(std::get<TriAlgebra>(build_family(p)))) == text, t.name() + " rebuild deterministic");
  }
  for (const char* f : {"p3", "sw3", "s3", "w3"}) {
    const TriEvaluator ev = std::get<TriEvaluator>(build_family({.family = f}));
    const std::string text = dump(to_json(ev));
    c.require(dump(to_json(std::get<TriEvaluator>(parse_text(text)))) == text, std::string(f) + " byte round trip");
  }
  const LieConstruction lt = lie_of(a3_t(2, 2));
  const std::string lie_text = dump(to_json(lt.algebra, &lt.sigma));
  const SuperFile sf = std::get<SuperFile>(parse_text(lie_text));
  c.require(sf.algebra == lt.algebra && sf.sigma && sf.sigma->map == lt.sigma.map, "superlie round trip");

  if (binary.empty()) {
    c.require(false, "no CLI binary given");
    return;
  }
  const std::string bin = "'" + binary + "'";
  const std::string dir = std::filesystem::temp_directory_path().string();
  const std::string file_a = dir + "/trialg_acc_a.json", file_b = dir + "/trialg_acc_b.json";
  c.require(shell(bin + " build a3t --m 2 --n 2 --out " + file_a) == 0, "build exit 0");
  c.require(shell(bin + " export " + file_a + " --out " + file_b) == 0, "export exit 0");
  std::ifstream ia(file_a), ib(file_b);
  std::stringstream sa, sb;
  sa << ia.rdbuf();
  sb << ib.rdbuf();
  c.require(!sa.str().empty() && sa.str() == sb.str(), "CLI export byte-identical");
  c.require(shell(bin + " verify " + file_a + " --axioms n6") == 0, "pass case exit 0");
  c.require(shell(bin + " verify o3 --axioms n5") == 1, "fail case exit 1");
  c.require(shell(bin + " verify no-such-family") == 2, "usage case exit 2");
  c.require(shell(bin + " verify a3t --m 2 --n 2 --axioms n7") == 2, "bad option exit 2");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"axiom suites (N=6) on the finite families", c1},
      {"N=8 subsumption", c2},
      {"A3(2,2;st) isomorphic to an O3 presentation", c3_iso},
      {"random parameter lemma maps are intertwiners", c4},
      {"polynomial families pass N=6 at degree cap 3", c5},
      {"Lie superalgebra round trip and property suite", c6},
      {"sigma on L0", c7},
      {"matrix superalgebra realizations", c8},
      {"simplicity verdicts", c9},
      {"N=5 suite", c10},
      {"JSON round trip and CLI exit codes", [&](Criterion& c) { c11(c, binary); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << std::fixed
              << std::setprecision(2) << secs << "s)\n";
    for (const auto& n : c.notes) std::cout << "       " << n << "\n";
    failed += !c.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
