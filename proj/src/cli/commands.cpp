#include "trialg/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "trialg/catalog/registry.hpp"
#include "trialg/cli/serialize.hpp"
#include "trialg/n5bridge/n5bridge.hpp"
#include "trialg/superlie/palmkvist.hpp"
#include "trialg/trisys/axioms.hpp"
#include "trialg/trisys/simplicity.hpp"

namespace trialg {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::string input;
  std::optional<unsigned> m, n, h, k;
  std::optional<std::string> a, phi, hmat, kmat;
  std::string out;
  std::string report;
};

void add_family_flags(CLI::App* sub, Inputs& in) {
  sub->add_option("--m", in.m, "first size parameter");
  sub->add_option("--n", in.n, "second size parameter");
  sub->add_option("--h", in.h, "a3st: half of the first size");
  sub->add_option("--k", in.k, "a3st: half of the second size; grassmann-n5: k");
  sub->add_option("--a", in.a, "sw3 matrix, rows separated by ';'");
  sub->add_option("--phi", in.phi, "twist matrix (scalar for sw3)");
  sub->add_option("--hmat", in.hmat, "star/c3star h matrix");
  sub->add_option("--kmat", in.kmat, "star/c3star k matrix");
}

Matrix parse_matrix(const std::string& flag, const std::string& text) {
  try {
    return Matrix::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

Loaded resolve(const Inputs& in) {
  if (std::filesystem::is_regular_file(in.input)) return load_file(in.input);
  const auto names = family_names();
  if (std::find(names.begin(), names.end(), in.input) == names.end())
    throw UsageError("'" + in.input + "' is neither a readable file nor a known family");
  FamilyParams p;
  p.family = in.input;
  p.m = in.m;
  p.n = in.n;
  p.h = in.h;
  p.k = in.k;
  if (in.a) p.a = parse_matrix("a", *in.a);
  if (in.phi) p.phi = parse_matrix("phi", *in.phi);
  if (in.hmat) p.hmat = parse_matrix("hmat", *in.hmat);
  if (in.kmat) p.kmat = parse_matrix("kmat", *in.kmat);
  try {
    return std::visit([](auto&& s) -> Loaded { return std::move(s); }, build_family(p));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

const TriAlgebra& need_finite(const Loaded& l) {
  if (const auto* t = std::get_if<TriAlgebra>(&l)) return *t;
  throw UsageError("this command needs a finite 3-algebra");
}

std::string serialize(const Loaded& l) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SuperFile>)
          return dump(to_json(x.algebra, x.sigma ? &*x.sigma : nullptr));
        else
          return dump(to_json(x));
      },
      l);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    save_file(path, text);
}

int cmd_export(const Inputs& in, std::ostream& out) {
  emit(serialize(resolve(in)), in.out, out);
  if (!in.out.empty()) out << "wrote " << in.out << "\n";
  return kExitPass;
}

int cmd_verify(const Inputs& in, const std::string& axioms, const SweepOptions& opt, std::ostream& out) {
  const Loaded l = resolve(in);
  const TriSystem* sys = nullptr;
  if (const auto* t = std::get_if<TriAlgebra>(&l)) sys = t;
  if (const auto* e = std::get_if<TriEvaluator>(&l)) sys = e;
  if (!sys) throw UsageError("verify needs a 3-algebra, not a superalgebra");
  AxiomReport r;
  try {
    if (axioms == "n6")
      r = check_n6(*sys, opt);
    else if (axioms == "n8")
      r = check_n8(*sys, opt);
    else
      r = check_n5(*sys, opt);
  } catch (const GuardrailError& e) {
    throw UsageError(e.what());
  }
  out << r.summary() << "\n";
  for (const auto& [axiom, count] : r.tuples_per_axiom) out << "  " << axiom << ": " << count << " tuples\n";
  if (!in.report.empty()) save_file(in.report, dump(report_to_json(r)));
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_lie(const Inputs& in, const std::vector<std::string>& checks, std::ostream& out) {
  const Loaded loaded = resolve(in);
  const TriAlgebra& t = need_finite(loaded);
  static const std::vector<std::string> all = {"super-jacobi", "consistency", "shortness", "transitivity",
                                               "generation",   "ideal",       "conjugation", "round-trip"};
  std::set<std::string> want;
  for (const auto& c : checks) {
    if (c == "all")
      want.insert(all.begin(), all.end());
    else if (std::find(all.begin(), all.end(), c) != all.end())
      want.insert(c);
    else
      throw UsageError("unknown check '" + c + "'");
  }

  LieConstruction lt;
  try {
    lt = lie_of(t);
  } catch (const std::invalid_argument& e) {
    out << t.name() << ": lie construction failed: " << e.what() << "\n";
    return kExitFail;
  }
  const SuperAlgebra& g = lt.algebra;
  out << g.name() << ": dim " << g.dim() << " = " << g.component_dim(-1) << " + " << g.component_dim(0) << " + "
      << g.component_dim(1) << "\n";
  if (lt.degenerate()) out << "  degenerate: L0 = 0 (zero bracket)\n";

  bool ok = true;
  auto line = [&](const std::string& name, bool pass, const std::string& extra = "") {
    out << "  " << name << ": " << (pass ? "PASS" : "FAIL") << extra << "\n";
    ok = ok && pass;
  };
  for (const auto& c : all) {
    if (!want.count(c)) continue;
    if (lt.degenerate() && (c == "transitivity" || c == "ideal")) {
      out << "  " << c << ": n/a (degenerate)\n";
      continue;
    }
    if (c == "super-jacobi") {
      const auto r = check_super_jacobi(g);
      line(c, r.passed(), " (" + std::to_string(r.tuples_checked) + " checks)");
      for (const auto& v : r.violations) out << "    at (" << v.tuple.at(0) << ", ...): " << v.lhs << " vs " << v.rhs << "\n";
    } else if (c == "consistency") {
      line(c, check_consistency(g));
    } else if (c == "shortness") {
      line(c, check_shortness(g));
    } else if (c == "transitivity") {
      line(c, check_transitivity(g));
    } else if (c == "generation") {
      line(c, check_generation(g));
    } else if (c == "ideal") {
      line(c, check_ideal_property(g));
    } else if (c == "conjugation") {
      line(c, verify_conjugation(g, lt.sigma).passed());
    } else if (c == "round-trip") {
      line(c, bracket_from_conjugation(g, lt.sigma) == t);
    }
  }
  if (!in.out.empty()) {
    save_file(in.out, dump(to_json(g, &lt.sigma)));
    out << "wrote " << in.out << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_reduce(const Inputs& in, const SweepOptions& opt, std::ostream& out) {
  const TriAlgebra n5 = reduce_n6_to_n5(need_finite(resolve(in)));
  AxiomReport r;
  try {
    r = check_n5(n5, opt);
  } catch (const GuardrailError& e) {
    throw UsageError(e.what());
  }
  out << r.summary() << "\n";
  if (!in.out.empty()) {
    save_file(in.out, dump(to_json(n5)));
    out << "wrote " << in.out << "\n";
  }
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_simplicity(const Inputs& in, std::ostream& out) {
  const Loaded l = resolve(in);
  SimplicityResult s;
  std::string name;
  if (const auto* t = std::get_if<TriAlgebra>(&l)) {
    s = simplicity(*t);
    name = t->name();
  } else if (const auto* f = std::get_if<SuperFile>(&l)) {
    s = superalgebra_simplicity(f->algebra);
    name = f->algebra.name();
  } else {
    throw UsageError("simplicity needs a finite structure");
  }
  out << name << ": " << to_string(s.verdict) << " (envelope dim " << s.envelope_dim << ")\n";
  if (!s.note.empty()) out << "  " << s.note << "\n";
  if (s.witness) out << "  invariant subspace of dim " << s.witness->dim() << "\n";
  return kExitPass;
}

int cmd_import_check(const std::string& path, std::ostream& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string original = ss.str();
  const Loaded first = parse_text(original);
  const std::string canonical = serialize(first);
  const Loaded second = parse_text(canonical);
  const bool exact = std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(second);
        if constexpr (std::is_same_v<T, SuperFile>) {
          if (a.sigma.has_value() != b.sigma.has_value()) return false;
          return a.algebra == b.algebra && (!a.sigma || a.sigma->map == b.sigma->map);
        } else if constexpr (std::is_same_v<T, TriAlgebra>) {
          return a == b;
        } else {
          return a.family == b.family && a.params == b.params;
        }
      },
      first);
  const bool stable = serialize(second) == canonical;
  out << path << ": round trip " << (exact ? "exact" : "NOT exact") << ", re-export "
      << (stable ? "byte-stable" : "NOT byte-stable") << ", input " << (original == canonical ? "is" : "is not")
      << " canonical\n";
  return exact && stable ? kExitPass : kExitFail;
}

}  // namespace

json report_to_json(const AxiomReport& r) {
  json j;
  j["subject"] = r.subject;
  j["passed"] = r.passed();
  j["axioms"] = r.axioms_checked;
  j["tuples_checked"] = r.tuples_checked;
  j["tuples_per_axiom"] = r.tuples_per_axiom;
  j["violation_count"] = r.violation_count;
  j["exhaustive"] = r.exhaustive;
  if (r.degree_cap) j["degree_cap"] = *r.degree_cap;
  json ws = json::array();
  for (const auto& v : r.violations) ws.push_back({{"axiom", v.axiom}, {"tuple", v.tuple}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  j["witnesses"] = std::move(ws);
  return j;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of 3-algebras and graded Lie superalgebras", "trialg"};
  app.require_subcommand(1);
  // --h is a family parameter, so help is long-form only.
  app.set_help_flag("--help", "print help");

  Inputs in;
  std::string axioms = "n6";
  SweepOptions opt;
  std::optional<std::uint64_t> sample;
  std::vector<std::string> checks{"all"};

  auto* build = app.add_subcommand("build", "build a catalog family and write its JSON file");
  build->add_option("family", in.input, "family name")->required();
  add_family_flags(build, in);
  build->add_option("--out", in.out, "output path (stdout if omitted)");

  auto* exp = app.add_subcommand("export", "write the canonical JSON file of a family or file");
  exp->add_option("input", in.input, "family name or JSON file")->required();
  add_family_flags(exp, in);
  exp->add_option("--out", in.out, "output path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "run an identity sweep");
  verify->add_option("input", in.input, "family name or JSON file")->required();
  add_family_flags(verify, in);
  verify->add_option("--axioms", axioms, "n6, n8 or n5")->check(CLI::IsMember({"n6", "n8", "n5"}));
  verify->add_option("--degree-cap", opt.degree_cap, "polynomial degree cap for evaluator families");
  verify->add_option("--sample", sample, "check this many random tuples per identity");
  verify->add_option("--seed", opt.seed, "sampling seed");
  verify->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--max-witnesses", opt.max_witnesses, "violations to report");
  verify->add_option("--report", in.report, "also write a JSON report");

  auto* lie = app.add_subcommand("lie", "build the graded Lie superalgebra and check it");
  lie->add_option("input", in.input, "family name or JSON file")->required();
  add_family_flags(lie, in);
  lie->add_option("--check", checks, "all, or any of super-jacobi, consistency, shortness, transitivity, "
                                     "generation, ideal, conjugation, round-trip")
      ->delimiter(',');
  lie->add_option("--out", in.out, "export the superalgebra with its conjugation");

  auto* reduce = app.add_subcommand("reduce-n5", "N=6 to N=5 reduction, checked");
  reduce->add_option("input", in.input, "family name or JSON file")->required();
  add_family_flags(reduce, in);
  reduce->add_option("--out", in.out, "write the reduced 3-algebra");

  auto* simp = app.add_subcommand("simplicity", "simplicity verdict");
  simp->add_option("input", in.input, "family name or JSON file")->required();
  add_family_flags(simp, in);

  std::string import_path;
  auto* imp = app.add_subcommand("import-check", "parse a file, re-export it and compare");
  imp->add_option("file", import_path, "JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  opt.sample = sample;

  try {
    if (build->parsed()) {
      if (std::filesystem::is_regular_file(in.input)) throw UsageError("build takes a family name; use export for files");
      return cmd_export(in, out);
    }
    if (exp->parsed()) return cmd_export(in, out);
    if (verify->parsed()) return cmd_verify(in, axioms, opt, out);
    if (lie->parsed()) return cmd_lie(in, checks, out);
    if (reduce->parsed()) return cmd_reduce(in, opt, out);
    if (simp->parsed()) return cmd_simplicity(in, out);
    if (imp->parsed()) return cmd_import_check(import_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trialg
