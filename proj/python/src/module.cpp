#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liesalg/cli_dispatch.hpp"
#include "liesalg/constructions.hpp"

namespace py = pybind11;
using namespace liesalg;

namespace {

// All operations speak JSON text; the python package wraps them with
// json.loads/dumps so callers work with plain dicts.

LieAlgebra parse_algebra_checked(const Json& gj) {
  LieAlgebra g = algebra_from_json(gj, "$");
  JacobiResult r = check_jacobi(g);
  if (!r.ok)
    throw ExactError("input table violates the Jacobi identity at triple (" + std::to_string(r.i) +
                     "," + std::to_string(r.j) + "," + std::to_string(r.k) + ")");
  return g;
}

Subspace levi_for(const LieAlgebra& g, const Json& gj, const std::string& levi_json) {
  if (!levi_json.empty()) return subspace_from_json(Json::parse(levi_json), "levi");
  if (gj.contains("levi")) return subspace_from_json(gj.at("levi"), "$.levi");
  Subspace rad = radical_subspace(g);
  if (rad.dim() == g.dim) return Subspace(g.dim);
  if (rad.dim() == 0) return Subspace::full(g.dim);
  throw ExactError("no Levi basis supplied or embedded");
}

std::string jacobi_op(const std::string& algebra) {
  LieAlgebra g = algebra_from_json(Json::parse(algebra), "$");
  JacobiResult r = check_jacobi(g);
  Json out{{"schema_version", 1}, {"pass", r.ok}};
  if (!r.ok) {
    out["triple"] = Json::array({r.i, r.j, r.k});
    Json defect = Json::array();
    for (const Scalar& s : r.defect) defect.push_back(scalar_to_json(s));
    out["defect"] = std::move(defect);
  }
  return dump_json(out);
}

std::string decide_op(const std::string& question, const std::string& algebra,
                      const std::string& levi, int witness_bound) {
  Json gj = Json::parse(algebra);
  LieAlgebra g = parse_algebra_checked(gj);
  DecomposedAlgebra d = verify_levi(g, levi_for(g, gj, levi));
  Verdict v = (question == "haagerup") ? haagerup_verdict(d, witness_bound)
              : (question == "discrete-haagerup")
                  ? discrete_haagerup_criterion(d)
                  : throw ExactError("question must be haagerup or discrete-haagerup");
  Json out = verdict_to_json(v);
  out["schema_version"] = 1;
  return dump_json(out);
}

std::string levi_verify_op(const std::string& algebra, const std::string& levi) {
  Json gj = Json::parse(algebra);
  LieAlgebra g = parse_algebra_checked(gj);
  Json out = decomposition_to_json(verify_levi(g, levi_for(g, gj, levi)));
  out["schema_version"] = 1;
  return dump_json(out);
}

std::string minimal_check_op(const std::string& salgebra) {
  SAlgebra a = salgebra_from_json(Json::parse(salgebra), "$");
  Json out = minimality_report_to_json(check_conditions(a));
  out["schema_version"] = 1;
  return dump_json(out);
}

std::string canonicalize_op(const std::string& salgebra) {
  SAlgebra a = salgebra_from_json(Json::parse(salgebra), "$");
  CanonicalPresentation c = canonical_presentation(a);
  Json out{{"schema_version", 1},
           {"presentation", presentation_to_json(c.presentation)},
           {"module_embedding", matrix_to_json(c.module_embedding)}};
  return dump_json(out);
}

std::string iso_test_op(const std::string& left, const std::string& right) {
  HModulePresentation p = presentation_from_json(Json::parse(left), "left");
  HModulePresentation q = presentation_from_json(Json::parse(right), "right");
  OrbitResult r = quotient_iso_test(p, q);
  Json out{{"schema_version", 1},
           {"result", r.answer == OrbitAnswer::Isomorphic      ? "isomorphic"
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
  return dump_json(out);
}

std::string invariant_forms_op(const std::string& rep, const std::string& cls_name) {
  Representation rho = rep_from_json(Json::parse(rep), "$");
  FormClass cls = cls_name == "all"           ? FormClass::All
                  : cls_name == "alternating" ? FormClass::Alternating
                  : cls_name == "symmetric"
                      ? FormClass::Symmetric
                      : throw ExactError("class must be all|alternating|symmetric");
  FormSpace fsp = invariant_forms(rho, cls);
  Json basis = Json::array();
  for (const Matrix& b : fsp.basis) basis.push_back(matrix_to_json(b));
  return dump_json(Json{{"schema_version", 1},
                        {"class", cls_name},
                        {"dim", static_cast<int>(fsp.basis.size())},
                        {"basis", std::move(basis)}});
}

std::string construct_op(const std::string& name, int n, int i, int dim, int t) {
  Json out;
  if (name == "sl2") out = tagged_to_json(build_sl2());
  else if (name == "so3") out = tagged_to_json(build_so3());
  else if (name == "sp4") out = tagged_to_json(build_sp4());
  else if (name == "sl3") out = tagged_to_json(build_sl3());
  else if (name == "su3") out = tagged_to_json(build_su3());
  else if (name == "su21") out = tagged_to_json(build_su21());
  else if (name == "so5") out = tagged_to_json(build_so_pq(5, 0));
  else if (name == "so41") out = tagged_to_json(build_so_pq(4, 1));
  else if (name == "sl2c-real") out = tagged_to_json(build_sl2c_real());
  else if (name == "sp21") out = tagged_to_json(build_sp21());
  else if (name == "vn") {
    VnModule v = build_vn(n);
    out = rep_to_json(v.rep);
    out["phi"] = matrix_to_json(v.phi);
  } else if (name == "heisenberg") {
    out = salgebra_to_json(build_heisenberg(dim));
  } else if (name == "d") {
    out = rep_to_json(build_d_module(n));
  } else if (name == "u") {
    out = rep_to_json(build_u_module(n));
  } else if (name == "hu") {
    HModulePresentation p = build_hu(n, i);
    out = salgebra_to_json(presented_salgebra(p));
    out["presentation"] = presentation_to_json(p);
  } else if (name == "family") {
    Matrix rows(2, 4);
    rows.at(0, 0) = Scalar(1);
    rows.at(0, 2) = Scalar(1);
    rows.at(0, 3) = Scalar(t);
    rows.at(1, 1) = Scalar(1);
    rows.at(1, 2) = Scalar(1);
    rows.at(1, 3) = Scalar(1);
    out = tagged_to_json(build_family_member(default_family_module(), Subspace::from_rows(rows)));
  } else {
    throw ExactError("unknown construction '" + name + "'");
  }
  out["schema_version"] = 1;
  return dump_json(out);
}

std::string h_of_op(const std::string& rep, const std::string& z_rows) {
  Representation v = rep_from_json(Json::parse(rep), "$");
  HModulePresentation p = h_of_module(v);
  if (!z_rows.empty())
    p = with_center_killed(p, subspace_from_json(Json::parse(z_rows), "Z"));
  Json out = salgebra_to_json(presented_salgebra(p));
  out["presentation"] = presentation_to_json(p);
  out["schema_version"] = 1;
  return dump_json(out);
}

std::string semidirect_op(const std::string& salgebra) {
  SAlgebra a = salgebra_from_json(Json::parse(salgebra), "$");
  Json out = tagged_to_json(semidirect(a));
  out["schema_version"] = 1;
  return dump_json(out);
}

py::tuple run_op(const std::vector<std::string>& args) {
  CliResult r = run_cli(args);
  return py::make_tuple(r.exit_code, r.output);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact structure theory for Lie s-algebras (JSON-string interface)";
  m.def("run", &run_op, py::arg("args"),
        "run a CLI invocation in-process; returns (exit_code, output)");
  m.def("jacobi", &jacobi_op, py::arg("algebra"));
  m.def("decide", &decide_op, py::arg("question"), py::arg("algebra"), py::arg("levi") = "",
        py::arg("witness_bound") = 2);
  m.def("levi_verify", &levi_verify_op, py::arg("algebra"), py::arg("levi") = "");
  m.def("minimal_check", &minimal_check_op, py::arg("salgebra"));
  m.def("canonicalize", &canonicalize_op, py::arg("salgebra"));
  m.def("iso_test", &iso_test_op, py::arg("left"), py::arg("right"));
  m.def("invariant_forms", &invariant_forms_op, py::arg("rep"), py::arg("form_class") = "all");
  m.def("construct", &construct_op, py::arg("name"), py::arg("n") = 1, py::arg("i") = 3,
        py::arg("dim") = 3, py::arg("t") = 0);
  m.def("h_of_module", &h_of_op, py::arg("rep"), py::arg("z") = "");
  m.def("semidirect", &semidirect_op, py::arg("salgebra"));
  py::register_exception<JsonError>(m, "SchemaError");
  py::register_exception<ExactError>(m, "DomainError");
}
