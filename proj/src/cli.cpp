#include "hopfdouble/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "hopfdouble/class_calculus.hpp"
#include "hopfdouble/eq2.hpp"
#include "hopfdouble/serialize.hpp"

namespace hopfdouble {
namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

struct Outcome {
  Json result = Json::object();
  Report checks;
};

struct Options {
  std::string out_path;
  int max_dim = kDefaultMaxOrder;
};

void guard(int dim, const Options& o) {
  if (dim > o.max_dim)
    throw ParseError("dimension " + std::to_string(dim) + " exceeds the size guard " + std::to_string(o.max_dim) +
                     " (raise it with --max-dim or HOPFDOUBLE_MAX_DIM)");
}

HopfPtr load_hopf(const Json& j, const Options& o) {
  HopfData data = hopf_from_json(j);
  guard(data.dim, o);
  return HopfAlgebra::create(std::move(data));
}

DoubleRepresentation load_rep(const std::string& path, const Options& o) {
  Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("algebra")) throw ParseError(path + ": $: missing field 'algebra'");
  DoublePtr d = DrinfeldDouble::build(load_hopf(j["algebra"], o));
  try {
    return rep_from_json(j, d);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json labels_of(const HopfAlgebra& h) {
  Json l = Json::array();
  for (int i = 0; i < h.dim(); ++i) l.push_back(h.label(i));
  return l;
}

Json chi_json(const ChiTuple& chi) {
  Json out = Json::array();
  for (const auto& c : chi) out.push_back(to_json(c));
  return out;
}

const char* status_name(SelectionStatus s) {
  switch (s) {
    case SelectionStatus::found: return "found";
    case SelectionStatus::none: return "none";
    case SelectionStatus::search_exhausted: return "search_exhausted";
  }
  return "";
}

Outcome cmd_verify_hopf(const std::string& path, const Options& o) {
  Json j = read_json_file(path);
  HopfData data;
  try {
    data = hopf_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  guard(data.dim, o);
  Outcome out;
  out.checks = verify_hopf_axioms(data);
  out.result["dim"] = data.dim;
  out.result["labels"] = data.labels;
  if (out.checks.passed()) {
    HopfPtr h = HopfAlgebra::create(std::move(data));
    out.result["commutative"] = h->is_commutative();
    out.result["cocommutative"] = h->is_cocommutative();
  }
  return out;
}

Outcome cmd_double(const std::string& path, bool universal, const Options& o) {
  HopfPtr f = load_hopf(read_json_file(path), o);
  DoublePtr d = DrinfeldDouble::build(f);
  Outcome out;
  out.result["base_dim"] = d->base_dim();
  out.result["dim"] = d->dim();
  out.result["labels"] = labels_of(*d->hopf());
  out.result["commutative"] = d->hopf()->is_commutative();
  out.result["cocommutative"] = d->hopf()->is_cocommutative();
  out.result["r_terms"] = canonical_r(*d).terms;
  out.checks.append(d->hopf()->axiom_report(), "axioms/");
  out.checks.append(verify_quasitriangular(*d), "double/");
  out.checks.append(verify_double_relations(*d), "double/");
  if (universal) {
    out.checks.append(verify_universal_cocycle(d), "universal/");
    out.checks.append(universal_differential_check(d), "universal/");
  }
  return out;
}

Outcome cmd_bimodule(const std::string& path, const Options& o) {
  DoubleRepresentation rho = load_rep(path, o);
  Outcome out;
  out.result["n"] = rho.n;
  out.checks.append(verify_double_rep(rho), "rep/");
  if (!out.checks.passed()) return out;
  BicovariantBimodule b = rep_to_bimodule(rho);
  out.checks.append(verify_bimodule(b), "bimodule/");
  out.checks.append(verify_bicovariance(b), "bicovariance/");
  DoubleRepresentation back = bimodule_to_rep(b);
  out.checks.add("round_trip", back.rhoF == rho.rhoF && back.rhoU == rho.rhoU);
  Matrix lambda = lambda_matrix(b);
  out.checks.add("qybe", check_qybe(lambda, rho.n));
  Json f = Json::array(), r = Json::array();
  for (int i = 0; i < rho.n; ++i) {
    Json frow = Json::array(), rrow = Json::array();
    for (int j = 0; j < rho.n; ++j) {
      frow.push_back(to_json(b.f_at(i, j)));
      rrow.push_back(to_json(b.R_at(i, j)));
    }
    f.push_back(std::move(frow));
    r.push_back(std::move(rrow));
  }
  out.result["U_labels"] = labels_of(*rho.D->U());
  out.result["F_labels"] = labels_of(*rho.D->F());
  out.result["f"] = std::move(f);
  out.result["R"] = std::move(r);
  out.result["lambda"] = to_json(lambda);
  return out;
}

Outcome cmd_calculi(const std::string& path, const Options& o) {
  DoubleRepresentation rho = load_rep(path, o);
  Outcome out;
  out.result["n"] = rho.n;
  out.checks.append(verify_double_rep(rho), "rep/");
  if (!out.checks.passed()) return out;
  std::vector<Vec> space = solve_chi_space(rho);
  out.result["U_labels"] = labels_of(*rho.D->U());
  out.result["solution_dim"] = space.size();
  Json basis = Json::array();
  for (const auto& v : space) basis.push_back(chi_json(unflatten(v, rho.n, rho.D->base_dim())));
  out.result["solution_basis"] = std::move(basis);
  ChiSelection sel = select_independent_chi(space, rho.n, rho.D->base_dim());
  out.result["selection"] = status_name(sel.status);
  if (sel.status != SelectionStatus::found) return out;
  FirstOrderCalculus c = make_calculus(rho, sel.chi);
  out.result["chi"] = chi_json(c.chi);
  out.checks.append(verify_chi(rho, c.chi), "chi/");
  out.checks.append(check_quasitriangular_chi(rho, c.chi), "chi/");
  out.checks.append(verify_double_rep(c.extended), "extended/");
  out.checks.append(verify_leibniz(c), "calculus/");
  IdealJ ideal = ideal_J(c);
  out.result["ideal_dim"] = ideal.basis.size();
  out.checks.append(ideal.invariance, "ideal/");
  ExtendedLambda el = extended_lambda(c);
  out.checks.append(el.report, "extended_lambda/");
  return out;
}

Json cohomology_json(const CohomologyReport& r) {
  Json j;
  j["Z"] = r.dim_Z();
  j["B"] = r.dim_B();
  j["H"] = r.dim_H();
  return j;
}

Outcome cmd_cohomology(const std::string& path, const Options& o) {
  DoubleRepresentation rho = load_rep(path, o);
  Outcome out;
  out.checks.append(verify_double_rep(rho), "rep/");
  if (!out.checks.passed()) return out;
  for (Base base : {Base::F, Base::D}) {
    const char* name = base == Base::F ? "F" : "D";
    CoefficientBimodule b = inv_gamma_bimodule(rho, base);
    out.checks.append(verify_bimodule_axioms(b), std::string(name) + "/bimodule/");
    Json per;
    for (int k : {0, 1}) {
      CohomologyReport r = cohomology_spaces(b, k);
      out.checks.append(r.report, std::string(name) + "/H" + std::to_string(k) + "/");
      per["H" + std::to_string(k)] = cohomology_json(r);
    }
    out.result[name] = std::move(per);
  }
  CoefficientBimodule over_f = inv_gamma_bimodule(rho, Base::F);
  CoefficientBimodule over_d = inv_gamma_bimodule(rho, Base::D);
  out.result["invariant_cocycles"] = invariant_cocycles(over_f).size();
  out.result["calculus_cocycles"] = calculus_cocycles(over_d).size();
  out.checks.append(verify_cocycle_correspondence(rho), "correspondence/");
  return out;
}

Json class_json(const FiniteGroup& g, const ConjugacyClass& c) {
  Json j;
  j["representative"] = g.labels[sz(c.representative)];
  Json m = Json::array();
  for (int x : c.members) m.push_back(g.labels[sz(x)]);
  j["members"] = std::move(m);
  return j;
}

Outcome cmd_group(const FiniteGroup& g, const std::string& action, int class_index) {
  Outcome out;
  out.result["order"] = g.order;
  out.result["labels"] = g.labels;
  std::vector<ConjugacyClass> classes = conjugacy_classes(g);
  if (action == "info") {
    Json cl = Json::array();
    for (const auto& c : classes) cl.push_back(class_json(g, c));
    out.result["classes"] = std::move(cl);
    out.result["table"] = g.table;
    return out;
  }
  HopfPtr f = function_hopf(g);
  if (action == "export-hopf") return {hopf_to_json(f->data()), {}};
  DoublePtr d = DrinfeldDouble::build(f);
  if (action == "export-rep") {
    if (class_index < 0 || class_index >= static_cast<int>(classes.size()))
      throw ParseError("--class " + std::to_string(class_index) + " out of range [0," +
                       std::to_string(classes.size()) + ")");
    return {rep_to_json(class_representation(d, g, classes[sz(class_index)])), {}};
  }
  // calculi
  Json list = Json::array();
  int nontrivial = 0, generic_found = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const ConjugacyClass& c = classes[k];
    const std::string prefix = "class" + std::to_string(k) + "/";
    Json j = class_json(g, c);
    DoubleRepresentation rho = class_representation(d, g, c);
    out.checks.append(verify_double_rep(rho), prefix + "rep/");
    std::vector<Vec> space = solve_chi_space(rho);
    ChiSelection sel = select_independent_chi(space, rho.n, d->base_dim());
    bool trivial = c.members.size() == 1 && c.members[0] == g.identity;
    if (!trivial) ++nontrivial;
    if (sel.status == SelectionStatus::found) ++generic_found;
    j["dim"] = rho.n;
    j["solution_dim"] = space.size();
    j["generic_selection"] = status_name(sel.status);
    ClassCalculus cc = class_calculus(d, g, c);
    j["degenerate"] = cc.calculus.degenerate;
    j["chi"] = chi_json(cc.calculus.chi);
    j["psi"] = to_json(cc.psi.values);
    out.checks.append(cc.report, prefix);
    out.checks.append(verify_leibniz(cc.calculus), prefix + "calculus/");
    out.checks.add(prefix + "qybe", check_qybe(lambda_from_rep(rho), rho.n));
    list.push_back(std::move(j));
  }
  out.result["U_labels"] = labels_of(*d->U());
  out.result["nontrivial_classes"] = nontrivial;
  out.result["generic_calculi"] = generic_found;
  out.checks.add("generic_calculi_match_nontrivial_classes", nontrivial == generic_found,
                 std::to_string(generic_found) + " vs " + std::to_string(nontrivial));
  out.result["calculi"] = std::move(list);
  return out;
}

Outcome cmd_eq2(std::vector<double> zs, double tol) {
  if (zs.empty()) zs = {0.3, 0.7, 1.1};
  Outcome out;
  Json samples = Json::array();
  for (double z : zs) {
    Json s;
    s["z"] = z;
    for (const auto& [key, rep] : {std::pair{"relations", eq2_verify_relations(z, tol)},
                                   std::pair{"block", eq2_verify_block(z, tol)}}) {
      Json rows = Json::array();
      for (const auto& c : rep.checks) {
        Json r;
        r["name"] = c.name;
        r["residual"] = c.residual;
        r["passed"] = c.passed;
        rows.push_back(std::move(r));
        std::ostringstream w;
        w << "residual " << c.residual;
        out.checks.add("z=" + Json(z).dump() + "/" + key + "/" + c.name, c.passed, c.passed ? "" : w.str());
      }
      s[key] = std::move(rows);
      s[std::string(key) + "_max_residual"] = rep.max_residual();
    }
    samples.push_back(std::move(s));
  }
  out.result["tol"] = tol;
  out.result["samples"] = std::move(samples);
  Json f = Json::array(), r = Json::array();
  for (const auto& row : eq2_reference_f()) f.push_back(Json(std::vector<std::string>(row.begin(), row.end())));
  for (const auto& row : eq2_reference_R()) r.push_back(Json(std::vector<std::string>(row.begin(), row.end())));
  out.result["reference_f"] = std::move(f);
  out.result["reference_R"] = std::move(r);
  return out;
}

int emit(const Json& report, const Options& o, std::ostream& out, std::ostream& err) {
  std::string text = report.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write " << o.out_path << "\n";
    return kExitInputError;
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of finite-dimensional Hopf algebras, their doubles and bicovariant calculi"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options opt;
  if (const char* env = std::getenv("HOPFDOUBLE_MAX_DIM")) {
    try {
      opt.max_dim = std::stoi(env);
    } catch (const std::exception&) {
      err << "error: HOPFDOUBLE_MAX_DIM is not an integer\n";
      return kExitInputError;
    }
  }
  app.add_option("--out", opt.out_path, "Write the JSON report to this path");
  app.add_option("--max-dim", opt.max_dim, "Size guard on dim F and on group orders");

  std::string file, generators, table, action;
  bool universal = false;
  int class_index = -1;
  std::vector<double> zs;
  double tol = 1e-10;

  auto* verify = app.add_subcommand("verify-hopf", "Check the Hopf algebra axioms of a hopf-algebra/1 file");
  verify->add_option("file", file)->required();
  auto* dbl = app.add_subcommand("double", "Build and verify the double of a hopf-algebra/1 file");
  dbl->add_option("file", file)->required();
  dbl->add_flag("--universal", universal, "Also check the universal cocycle and differential");
  auto* bim = app.add_subcommand("bimodule", "Bicovariant bimodule of a double-rep/1 file");
  bim->add_option("file", file)->required();
  auto* calc = app.add_subcommand("calculi", "Solve for bicovariant calculi of a double-rep/1 file");
  calc->add_option("file", file)->required();
  auto* coh = app.add_subcommand("cohomology", "Hochschild cohomology with invGamma coefficients of a double-rep/1 file");
  coh->add_option("file", file)->required();
  auto* grp = app.add_subcommand("group", "Finite group F(G) pipeline");
  auto* gen_opt = grp->add_option("--generators", generators, "Permutations in cycle notation, e.g. \"(12),(123)\"");
  auto* tab_opt = grp->add_option("--table", table, "cayley-table/1 file");
  gen_opt->excludes(tab_opt);
  grp->add_option("action", action, "info | calculi | export-hopf | export-rep")
      ->required()
      ->check(CLI::IsMember({"info", "calculi", "export-hopf", "export-rep"}));
  grp->add_option("--class", class_index, "Class index for export-rep");
  auto* eq2 = app.add_subcommand("eq2", "Numerical check of the five-dimensional E_q(2) double representation");
  eq2->add_option("--z", zs, "Deformation parameter (repeatable)")->take_all();
  eq2->add_option("--tol", tol, "Max-norm tolerance");

  std::vector<std::string> argv_store;
  argv_store.push_back("hopfdouble");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  Json report;
  report["command"] = args;
  Outcome result;
  try {
    if (verify->parsed()) {
      result = cmd_verify_hopf(file, opt);
    } else if (dbl->parsed()) {
      result = cmd_double(file, universal, opt);
    } else if (bim->parsed()) {
      result = cmd_bimodule(file, opt);
    } else if (calc->parsed()) {
      result = cmd_calculi(file, opt);
    } else if (coh->parsed()) {
      result = cmd_cohomology(file, opt);
    } else if (grp->parsed()) {
      if (generators.empty() == table.empty()) throw ParseError("group: give exactly one of --generators or --table");
      FiniteGroup g = generators.empty() ? group_from_json(read_json_file(table), opt.max_dim)
                                         : group_from_generators(generators, opt.max_dim);
      if (action == "export-hopf" || action == "export-rep") {
        // Exports are bare documents so they can be fed back as inputs.
        return emit(cmd_group(g, action, class_index).result, opt, out, err);
      }
      result = cmd_group(g, action, class_index);
    } else if (eq2->parsed()) {
      result = cmd_eq2(zs, tol);
    }
  } catch (const AxiomFailure& e) {
    result.checks = e.report();
  } catch (const VerificationFailure& e) {
    result.checks = e.report();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  report["passed"] = result.checks.passed();
  report["result"] = std::move(result.result);
  report["checks"] = to_json(result.checks);
  int code = emit(report, opt, out, err);
  if (code != kExitPass) return code;
  if (const CheckResult* f = result.checks.first_failure()) {
    err << "check failed: " << f->name << (f->witness.empty() ? "" : " (" + f->witness + ")") << "\n";
    return kExitCheckFailed;
  }
  return kExitPass;
}

}  // namespace hopfdouble
