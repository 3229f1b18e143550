#include "liesalg/cli_dispatch.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <random>

#include "liesalg/constructions.hpp"

namespace liesalg {

namespace fs = std::filesystem;

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json ok_payload(Json j) {
  j["schema_version"] = 1;
  return j;
}

Subspace subspace_or_rows(const Json& j, const std::string& path, int ambient) {
  if (j.is_object()) return subspace_from_json(j, path);
  if (j.is_array()) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < j.size(); ++i) {
      const Json& row = j.at(i);
      std::string rp = path + "[" + std::to_string(i) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != ambient)
        throw JsonError(rp, "row has wrong length");
      Vec v(ambient);
      for (int c = 0; c < ambient; ++c)
        v[c] = scalar_from_json(row.at(c), rp + "[" + std::to_string(c) + "]");
      rows.push_back(std::move(v));
    }
    return Subspace::from_vectors(rows, ambient);
  }
  throw JsonError(path, "expected a subspace object or an array of rows");
}

// Parse an algebra and insist on a Jacobi-valid table; the jacobi
// subcommand has its own reporting path instead.
LieAlgebra load_algebra_checked(const std::string& file, Json& gjson) {
  gjson = load_json_file(file);
  LieAlgebra g = algebra_from_json(gjson, "$");
  JacobiResult r = check_jacobi(g);
  if (!r.ok)
    throw ExactError("input table violates the Jacobi identity at triple (" + std::to_string(r.i) +
                     "," + std::to_string(r.j) + "," + std::to_string(r.k) + ")");
  return g;
}

Subspace resolve_levi(const LieAlgebra& g, const Json& gjson, const std::string& levi_file) {
  if (!levi_file.empty()) {
    Json j = load_json_file(levi_file);
    return subspace_or_rows(j, levi_file, g.dim);
  }
  if (gjson.contains("levi")) return subspace_from_json(gjson.at("levi"), "$.levi");
  Subspace rad = radical_subspace(g);
  if (rad.dim() == g.dim) return Subspace(g.dim);
  if (rad.dim() == 0) return Subspace::full(g.dim);
  throw ExactError("no Levi basis supplied (pass --levi or embed a 'levi' key)");
}

Json jacobi_cmd(const std::string& input, int& exit_code) {
  Json gj = load_json_file(input);
  LieAlgebra g = algebra_from_json(gj, "$");
  JacobiResult r = check_jacobi(g);
  Json out{{"pass", r.ok}};
  if (!r.ok) {
    out["triple"] = Json::array({r.i, r.j, r.k});
    Json defect = Json::array();
    for (const Scalar& s : r.defect) defect.push_back(scalar_to_json(s));
    out["defect"] = std::move(defect);
    exit_code = 1;
  }
  return ok_payload(out);
}

Json radical_cmd(const std::string& input) {
  Json gj;
  LieAlgebra g = load_algebra_checked(input, gj);
  Subspace rad = radical_subspace(g);
  return ok_payload(Json{{"radical", subspace_to_json(rad)}, {"dim", rad.dim()}});
}

Json levi_verify_cmd(const std::string& input, const std::string& levi_file) {
  Json gj;
  LieAlgebra g = load_algebra_checked(input, gj);
  DecomposedAlgebra d = verify_levi(g, resolve_levi(g, gj, levi_file));
  return ok_payload(decomposition_to_json(d));
}

Json invariant_forms_cmd(const std::string& input, const std::string& cls_name) {
  Representation rho = rep_from_json(load_json_file(input), "$", fs::path(input).parent_path());
  FormClass cls;
  if (cls_name == "all")
    cls = FormClass::All;
  else if (cls_name == "alternating")
    cls = FormClass::Alternating;
  else if (cls_name == "symmetric")
    cls = FormClass::Symmetric;
  else
    throw JsonError("--class", "expected all|alternating|symmetric");
  FormSpace fsp = invariant_forms(rho, cls);
  Json basis = Json::array();
  for (const Matrix& b : fsp.basis) basis.push_back(matrix_to_json(b));
  return ok_payload(Json{{"class", cls_name},
                         {"dim", static_cast<int>(fsp.basis.size())},
                         {"basis", std::move(basis)}});
}

Json construct_cmd(const std::string& what, int n, int i_param, int dim, int k, int t,
                   const std::string& input, const std::string& z_rows,
                   const std::string& plane_rows) {
  auto tagged_out = [](const TaggedAlgebra& t_) { return ok_payload(tagged_to_json(t_)); };
  auto rep_out = [](const Representation& r, Json extra = Json::object()) {
    Json j = rep_to_json(r);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return ok_payload(j);
  };
  auto salg_out = [](const SAlgebra& a, Json extra = Json::object()) {
    Json j = salgebra_to_json(a);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return ok_payload(j);
  };
  if (what == "sl2") return tagged_out(build_sl2());
  if (what == "so3") return tagged_out(build_so3());
  if (what == "sp4") return tagged_out(build_sp4());
  if (what == "sl3") return tagged_out(build_sl3());
  if (what == "su3") return tagged_out(build_su3());
  if (what == "su21") return tagged_out(build_su21());
  if (what == "so5") return tagged_out(build_so_pq(5, 0));
  if (what == "so41") return tagged_out(build_so_pq(4, 1));
  if (what == "sl2c-real") return tagged_out(build_sl2c_real());
  if (what == "sp21") return tagged_out(build_sp21());
  if (what == "vn") {
    VnModule v = build_vn(n);
    return rep_out(v.rep, Json{{"phi", matrix_to_json(v.phi)},
                               {"provenance", Json{{"construction", "vn"}, {"n", n}}}});
  }
  if (what == "heisenberg") {
    SAlgebra a = build_heisenberg(dim);
    return salg_out(a, Json{{"provenance", Json{{"construction", "heisenberg"}, {"dim", dim}}}});
  }
  if (what == "d") {
    Representation r = build_d_module(n);
    return rep_out(r, Json{{"provenance", Json{{"construction", "d"}, {"n", n}}}});
  }
  if (what == "u") {
    Representation r = build_u_module(n);
    return rep_out(r, Json{{"provenance", Json{{"construction", "u"}, {"n", n}}}});
  }
  if (what == "hu") {
    HModulePresentation p = build_hu(n, i_param);
    SAlgebra a = presented_salgebra(p);
    return salg_out(a, Json{{"presentation", presentation_to_json(p)},
                            {"provenance", Json{{"construction", "hu"}, {"n", n}, {"i", i_param}}}});
  }
  if (what == "h-of") {
    Representation v = rep_from_json(load_json_file(input), "$", fs::path(input).parent_path());
    HModulePresentation p = h_of_module(v);
    SAlgebra a = presented_salgebra(p);
    return salg_out(a, Json{{"presentation", presentation_to_json(p)},
                            {"provenance", Json{{"construction", "h_of_module"}}}});
  }
  if (what == "h-quotient") {
    Representation v = rep_from_json(load_json_file(input), "$", fs::path(input).parent_path());
    HModulePresentation p = h_of_module(v);
    Json zj = Json::parse(z_rows, nullptr, true);
    Subspace z = subspace_or_rows(zj, "--z", p.alt_dim());
    p = with_center_killed(p, z);
    SAlgebra a = presented_salgebra(p);
    return salg_out(a, Json{{"presentation", presentation_to_json(p)},
                            {"provenance", Json{{"construction", "h_quotient"}}}});
  }
  if (what == "sym-power") {
    Representation v = rep_from_json(load_json_file(input), "$", fs::path(input).parent_path());
    return rep_out(build_symmetric_power(v, k),
                   Json{{"provenance", Json{{"construction", "sym_power"}, {"k", k}}}});
  }
  if (what == "semidirect") {
    SAlgebra a = salgebra_from_json(load_json_file(input), "$", fs::path(input).parent_path());
    return tagged_out(semidirect(a));
  }
  if (what == "family") {
    Representation v = default_family_module();
    Subspace plane;
    if (!plane_rows.empty()) {
      Json pj = Json::parse(plane_rows, nullptr, true);
      plane = subspace_or_rows(pj, "--plane", 4);
    } else {
      // P(t) = span{(1,0,1,t),(0,1,1,1)}: planes in pairwise distinct orbits
      Matrix rows(2, 4);
      rows.at(0, 0) = Scalar(1);
      rows.at(0, 2) = Scalar(1);
      rows.at(0, 3) = Scalar(t);
      rows.at(1, 1) = Scalar(1);
      rows.at(1, 2) = Scalar(1);
      rows.at(1, 3) = Scalar(1);
      plane = Subspace::from_rows(rows);
    }
    return tagged_out(build_family_member(v, plane));
  }
  throw JsonError("construct", "unknown construction '" + what + "'");
}

Json minimal_check_cmd(const std::string& input) {
  SAlgebra a = salgebra_from_json(load_json_file(input), "$", fs::path(input).parent_path());
  return ok_payload(minimality_report_to_json(check_conditions(a)));
}

Json canonicalize_cmd(const std::string& input) {
  SAlgebra a = salgebra_from_json(load_json_file(input), "$", fs::path(input).parent_path());
  CanonicalPresentation c = canonical_presentation(a);
  return ok_payload(Json{{"presentation", presentation_to_json(c.presentation)},
                         {"module_embedding", matrix_to_json(c.module_embedding)}});
}

Json iso_test_cmd(const std::string& left, const std::string& right) {
  HModulePresentation p =
      presentation_from_json(load_json_file(left), "$", fs::path(left).parent_path());
  HModulePresentation q =
      presentation_from_json(load_json_file(right), "$", fs::path(right).parent_path());
  OrbitResult r = quotient_iso_test(p, q);
  Json out{{"result", r.answer == OrbitAnswer::Isomorphic      ? "isomorphic"
                      : r.answer == OrbitAnswer::NotIsomorphic ? "not-isomorphic"
                                                               : "undecided"},
           {"note", r.note}};
  if (r.scaling) {
    Json sc = Json::array();
    for (const Scalar& s : *r.scaling) sc.push_back(scalar_to_json(s));
    out["certificate"] = std::move(sc);
  } else {
    out["certificate"] = nullptr;
  }
  return ok_payload(out);
}

Json witness_cmd(const std::string& input, const std::string& levi_file, int bound) {
  Json gj;
  LieAlgebra g = load_algebra_checked(input, gj);
  DecomposedAlgebra d = verify_levi(g, resolve_levi(g, gj, levi_file));
  auto w = find_witness(d, bound);
  Json out{{"bound", bound}};
  out["witness"] = w ? witness_to_json(*w) : Json(nullptr);
  if (!w) out["note"] = "none-found";
  return ok_payload(out);
}

Json decide_cmd(const std::string& question, const std::string& input,
                const std::string& levi_file, int bound) {
  Json gj;
  LieAlgebra g = load_algebra_checked(input, gj);
  DecomposedAlgebra d = verify_levi(g, resolve_levi(g, gj, levi_file));
  Verdict v;
  if (question == "haagerup")
    v = haagerup_verdict(d, bound);
  else if (question == "discrete-haagerup")
    v = discrete_haagerup_criterion(d);
  else
    throw JsonError("decide", "question must be haagerup or discrete-haagerup");
  return ok_payload(verdict_to_json(v));
}

// ---- corpus runner ----

struct CaseOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

CaseOutcome run_cli_case(const fs::path& root, const Json& case_json, const std::string& name);
CaseOutcome run_invariance_case(const fs::path& root, const Json& case_json, const std::string& name);

}  // namespace

CliResult run_corpus(const std::string& dir) {
  CliResult res;
  fs::path root(dir);
  fs::path cases = root / "cases";
  std::vector<fs::path> files;
  if (fs::exists(cases))
    for (const auto& entry : fs::directory_iterator(cases))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Json case_reports = Json::array();
  int passed = 0;
  for (const fs::path& f : files) {
    Json case_json = load_json_file(f.string());
    std::string name = case_json.value("name", f.stem().string());
    std::string kind = case_json.value("kind", "cli");
    CaseOutcome oc;
    try {
      if (kind == "cli")
        oc = run_cli_case(root, case_json, name);
      else if (kind == "invariance")
        oc = run_invariance_case(root, case_json, name);
      else {
        oc.name = name;
        oc.detail = "unknown case kind '" + kind + "'";
      }
    } catch (const std::exception& e) {
      oc.name = name;
      oc.pass = false;
      oc.detail = e.what();
    }
    if (oc.pass) ++passed;
    Json cj{{"name", oc.name}, {"pass", oc.pass}};
    if (!oc.detail.empty()) cj["detail"] = oc.detail;
    case_reports.push_back(std::move(cj));
  }
  Json out{{"schema_version", 1},
           {"total", static_cast<int>(files.size())},
           {"passed", passed},
           {"failed", static_cast<int>(files.size()) - passed},
           {"cases", std::move(case_reports)}};
  if (files.empty()) out["warning"] = "empty corpus";
  res.exit_code = (passed == static_cast<int>(files.size())) ? 0 : 1;
  res.output = dump_json(out);
  return res;
}

namespace {

std::vector<std::string> resolve_paths(const fs::path& root, const Json& args) {
  std::vector<std::string> argv;
  for (const auto& a : args) {
    std::string s = a.get<std::string>();
    if (fs::exists(root / s))
      argv.push_back((root / s).string());
    else
      argv.push_back(s);
  }
  return argv;
}

CaseOutcome run_cli_case(const fs::path& root, const Json& case_json, const std::string& name) {
  CaseOutcome oc;
  oc.name = name;
  std::vector<std::string> argv = resolve_paths(root, case_json.at("args"));
  CliResult r = run_cli(argv);
  int expect_exit = case_json.value("expect_exit", 0);
  if (r.exit_code != expect_exit) {
    oc.detail = "exit code " + std::to_string(r.exit_code) + " != expected " +
                std::to_string(expect_exit);
    return oc;
  }
  if (case_json.contains("expected")) {
    Json got = Json::parse(r.output);
    if (got != case_json.at("expected")) {
      oc.detail = "output mismatch";
      return oc;
    }
  }
  if (case_json.contains("expected_subset")) {
    Json got = Json::parse(r.output);
    for (auto it = case_json.at("expected_subset").begin(); it != case_json.at("expected_subset").end();
         ++it) {
      if (!got.contains(it.key()) || got.at(it.key()) != it.value()) {
        oc.detail = "field '" + it.key() + "' mismatch";
        return oc;
      }
    }
  }
  oc.pass = true;
  return oc;
}

// Presentation-invariance property: verdicts and factor recognition are
// unchanged under seeded random inner automorphisms exp(ad x) applied to
// the Levi basis.
CaseOutcome run_invariance_case(const fs::path& root, const Json& case_json, const std::string& name) {
  CaseOutcome oc;
  oc.name = name;
  std::string file = (root / case_json.at("input").get<std::string>()).string();
  Json gj = load_json_file(file);
  LieAlgebra g = algebra_from_json(gj, "$");
  Subspace levi = resolve_levi(g, gj, "");
  DecomposedAlgebra base = verify_levi(g, levi);
  Verdict base_h = haagerup_verdict(base);
  Verdict base_d = discrete_haagerup_criterion(base);
  auto entry_names = [](const DecomposedAlgebra& d) {
    std::vector<std::string> names;
    for (const SimpleFactor& f : d.factors) names.push_back(f.entry ? f.entry->name : "unknown");
    std::sort(names.begin(), names.end());
    return names;
  };
  std::vector<std::string> base_entries = entry_names(base);
  int autos = case_json.value("autos", 50);
  std::uint64_t seed = case_json.value("seed", 20250801u);
  std::mt19937_64 rng(seed);
  Subspace rad = base.radical;
  // candidate directions: radical basis plus any basis vector with nilpotent ad
  std::vector<Vec> directions;
  for (int i = 0; i < rad.dim(); ++i) directions.push_back(rad.basis.row(i));
  for (int i = 0; i < g.dim; ++i) {
    Vec e(g.dim);
    e[i] = Scalar(1);
    try {
      inner_automorphism(g, e);
      directions.push_back(e);
    } catch (const ExactError&) {
    }
  }
  if (directions.empty()) {
    oc.detail = "no nilpotent directions available";
    return oc;
  }
  int done = 0, attempts = 0;
  while (done < autos && attempts < autos * 20) {
    ++attempts;
    Vec x(g.dim);
    for (const Vec& dir : directions) {
      long c = static_cast<long>(rng() % 5) - 2;  // coefficients in -2..2
      if (c != 0) x = vec_add(x, vec_scaled(dir, Scalar(c)));
    }
    if (vec_is_zero(x)) continue;
    Matrix phi;
    try {
      phi = inner_automorphism(g, x);
    } catch (const ExactError&) {
      continue;
    }
    std::vector<Vec> rows;
    for (int i = 0; i < levi.dim(); ++i) rows.push_back(matvec(phi, levi.basis.row(i)));
    DecomposedAlgebra d2 = verify_levi(g, Subspace::from_vectors(rows, g.dim));
    Verdict h2 = haagerup_verdict(d2);
    Verdict d2v = discrete_haagerup_criterion(d2);
    if (h2.answer != base_h.answer || h2.reason != base_h.reason ||
        d2v.answer != base_d.answer || d2v.reason != base_d.reason ||
        entry_names(d2) != base_entries) {
      oc.detail = "verdict changed under inner automorphism #" + std::to_string(done);
      return oc;
    }
    ++done;
  }
  if (done < autos) {
    oc.detail = "could not draw enough nilpotent conjugators";
    return oc;
  }
  oc.pass = true;
  oc.detail = std::to_string(done) + " automorphisms, seed " + std::to_string(seed);
  return oc;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  CLI::App app{"exact structure theory for Lie s-algebras"};
  app.require_subcommand(1);

  std::string input, levi_file, cls_name = "all", left, right, dir_path;
  std::string what, z_rows, plane_rows;
  int n = 1, i_param = 3, dim = 3, k = 1, t = 0, bound = 2;

  CLI::App* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity");
  jacobi->add_option("--input", input)->required();

  CLI::App* radical = app.add_subcommand("radical", "compute the radical");
  radical->add_option("--input", input)->required();

  CLI::App* levi = app.add_subcommand("levi-verify", "verify a Levi decomposition");
  levi->add_option("--input", input)->required();
  levi->add_option("--levi", levi_file);

  CLI::App* forms = app.add_subcommand("invariant-forms", "solve for invariant bilinear forms");
  forms->add_option("--input", input)->required();
  forms->add_option("--class", cls_name);

  CLI::App* construct = app.add_subcommand("construct", "build catalog algebras and modules");
  construct->add_option("name", what)->required();
  construct->add_option("--n", n);
  construct->add_option("--i", i_param);
  construct->add_option("--dim", dim);
  construct->add_option("--k", k);
  construct->add_option("--t", t);
  construct->add_option("--input", input);
  construct->add_option("--z", z_rows);
  construct->add_option("--plane", plane_rows);

  CLI::App* minimal = app.add_subcommand("minimal-check", "minimality conditions report");
  minimal->add_option("--input", input)->required();

  CLI::App* canon = app.add_subcommand("canonicalize", "canonical (v, Z) presentation");
  canon->add_option("--input", input)->required();

  CLI::App* iso = app.add_subcommand("iso-test", "orbit isomorphism test for presentations");
  iso->add_option("--left", left)->required();
  iso->add_option("--right", right)->required();

  CLI::App* wit = app.add_subcommand("witness", "extract an embedded obstruction subalgebra");
  wit->add_option("--input", input)->required();
  wit->add_option("--levi", levi_file);
  wit->add_option("--witness-bound", bound);

  CLI::App* decide = app.add_subcommand("decide", "decision procedures");
  std::string question;
  decide->add_option("question", question)->required();
  decide->add_option("--input", input)->required();
  decide->add_option("--levi", levi_file);
  decide->add_option("--witness-bound", bound);

  CLI::App* corpus = app.add_subcommand("corpus", "run the golden corpus");
  corpus->add_option("--dir", dir_path)->required();

  std::vector<const char*> argv;
  argv.push_back("liesalg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    res.output = app.help();
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.output = dump_json(Json{{"schema_version", 1},
                                {"error", Json{{"kind", "usage"}, {"message", e.what()}}}});
    res.exit_code = 2;
    return res;
  }

  try {
    Json out;
    if (*jacobi) {
      out = jacobi_cmd(input, res.exit_code);
    } else if (*radical) {
      out = radical_cmd(input);
    } else if (*levi) {
      out = levi_verify_cmd(input, levi_file);
    } else if (*forms) {
      out = invariant_forms_cmd(input, cls_name);
    } else if (*construct) {
      out = construct_cmd(what, n, i_param, dim, k, t, input, z_rows, plane_rows);
    } else if (*minimal) {
      out = minimal_check_cmd(input);
    } else if (*canon) {
      out = canonicalize_cmd(input);
    } else if (*iso) {
      out = iso_test_cmd(left, right);
    } else if (*wit) {
      out = witness_cmd(input, levi_file, bound);
    } else if (*decide) {
      out = decide_cmd(question, input, levi_file, bound);
    } else if (*corpus) {
      return run_corpus(dir_path);
    }
    res.output = dump_json(out);
    return res;
  } catch (const JsonError& e) {
    res.output = dump_json(Json{
        {"schema_version", 1},
        {"error", Json{{"kind", "schema"}, {"path", e.path}, {"message", e.what()}}}});
    res.exit_code = 2;
    return res;
  } catch (const Json::exception& e) {
    res.output = dump_json(Json{{"schema_version", 1},
                                {"error", Json{{"kind", "schema"}, {"message", e.what()}}}});
    res.exit_code = 2;
    return res;
  } catch (const ExactError& e) {
    res.output = dump_json(Json{{"schema_version", 1},
                                {"error", Json{{"kind", "domain"}, {"message", e.what()}}}});
    res.exit_code = 1;
    return res;
  }
}

}  // namespace liesalg
