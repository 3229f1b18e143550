#include "liesalg/json_io.hpp"

#include <fstream>

namespace liesalg {

namespace {

std::string field_to_string(Field f) { return f == Field::Q ? "Q" : "Q(i)"; }

Field field_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw JsonError(path, "field tag must be a string");
  std::string s = j.get<std::string>();
  if (s == "Q") return Field::Q;
  if (s == "Q(i)" || s == "Qi") return Field::QI;
  throw JsonError(path, "unknown field tag '" + s + "'");
}

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw JsonError(path, "expected an integer");
  return j.get<int>();
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.im == 0) return rational_to_string(s.re);
  return Json{{"re", rational_to_string(s.re)}, {"im", rational_to_string(s.im)}};
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return Scalar(rational_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_object()) {
      Rational re(0), im(0);
      if (j.contains("re")) re = rational_from_string(j.at("re").get<std::string>());
      if (j.contains("im")) im = rational_from_string(j.at("im").get<std::string>());
      return Scalar(re, im);
    }
  } catch (const ExactError& e) {
    throw JsonError(path, e.what());
  } catch (const Json::exception& e) {
    throw JsonError(path, e.what());
  }
  throw JsonError(path, "expected a rational string or {re, im} object");
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(scalar_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw JsonError(path, "matrix must be an object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw JsonError(path, "matrix needs rows, cols, entries");
  int rows = int_from_json(j.at("rows"), path + ".rows");
  int cols = int_from_json(j.at("cols"), path + ".cols");
  if (rows < 0 || cols < 0) throw JsonError(path, "negative matrix dimensions");
  const Json& e = j.at("entries");
  if (!e.is_array() || static_cast<int>(e.size()) != rows)
    throw JsonError(path + ".entries", "entry grid has wrong row count");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = e.at(i);
    std::string rpath = path + ".entries[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw JsonError(rpath, "entry row has wrong length");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = scalar_from_json(row.at(c), rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < s.ambient; ++c) row.push_back(scalar_to_json(s.basis.at(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"ambient", s.ambient}, {"dim", s.dim()}, {"basis", std::move(rows)}};
}

Subspace subspace_from_json(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
    throw JsonError(path, "subspace needs ambient and basis");
  int ambient = int_from_json(j.at("ambient"), path + ".ambient");
  const Json& rows = j.at("basis");
  if (!rows.is_array()) throw JsonError(path + ".basis", "basis must be an array of rows");
  std::vector<Vec> vecs;
  for (size_t i = 0; i < rows.size(); ++i) {
    const Json& row = rows.at(i);
    std::string rpath = path + ".basis[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != ambient)
      throw JsonError(rpath, "basis row has wrong length");
    Vec v(ambient);
    for (int c = 0; c < ambient; ++c)
      v[c] = scalar_from_json(row.at(c), rpath + "[" + std::to_string(c) + "]");
    vecs.push_back(std::move(v));
  }
  return Subspace::from_vectors(vecs, ambient);
}

Json algebra_to_json(const LieAlgebra& g) {
  Json brackets = Json::object();
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      const Vec& v = g.bracket_pair(i, j);
      if (vec_is_zero(v)) continue;
      Json entry = Json::object();
      for (int k = 0; k < g.dim; ++k)
        if (!v[k].is_zero()) entry[std::to_string(k)] = scalar_to_json(v[k]);
      brackets[std::to_string(i) + "," + std::to_string(j)] = std::move(entry);
    }
  return Json{{"field", field_to_string(g.field)},
              {"dim", g.dim},
              {"basis_names", g.basis_names},
              {"brackets", std::move(brackets)}};
}

LieAlgebra algebra_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw JsonError(path, "algebra must be an object");
  for (const char* key : {"field", "dim", "brackets"})
    if (!j.contains(key)) throw JsonError(path, std::string("algebra needs '") + key + "'");
  LieAlgebra g;
  g.field = field_from_json(j.at("field"), path + ".field");
  g.dim = int_from_json(j.at("dim"), path + ".dim");
  if (g.dim < 0) throw JsonError(path + ".dim", "negative dimension");
  g.table.assign(static_cast<size_t>(g.dim) * (g.dim - 1) / 2, Vec(g.dim));
  if (j.contains("basis_names")) {
    const Json& names = j.at("basis_names");
    if (!names.is_array() || static_cast<int>(names.size()) != g.dim)
      throw JsonError(path + ".basis_names", "needs one name per basis element");
    for (const auto& n : names) g.basis_names.push_back(n.get<std::string>());
  }
  g.default_names();
  const Json& brackets = j.at("brackets");
  if (!brackets.is_object()) throw JsonError(path + ".brackets", "brackets must be an object");
  for (auto it = brackets.begin(); it != brackets.end(); ++it) {
    std::string key = it.key();
    std::string bpath = path + ".brackets['" + key + "']";
    auto comma = key.find(',');
    if (comma == std::string::npos) throw JsonError(bpath, "bracket key must be 'i,j'");
    int i, jj;
    try {
      i = std::stoi(key.substr(0, comma));
      jj = std::stoi(key.substr(comma + 1));
    } catch (...) {
      throw JsonError(bpath, "bracket key must be 'i,j' with integer indices");
    }
    if (i < 0 || jj < 0 || i >= g.dim || jj >= g.dim || i >= jj)
      throw JsonError(bpath, "bracket key must satisfy 0 <= i < j < dim");
    if (!it.value().is_object()) throw JsonError(bpath, "bracket value must be an object");
    Vec v(g.dim);
    for (auto c = it.value().begin(); c != it.value().end(); ++c) {
      int k;
      try {
        k = std::stoi(c.key());
      } catch (...) {
        throw JsonError(bpath + "." + c.key(), "coefficient key must be an index");
      }
      if (k < 0 || k >= g.dim) throw JsonError(bpath + "." + c.key(), "index out of range");
      v[k] = scalar_from_json(c.value(), bpath + "." + c.key());
    }
    g.set_bracket(i, jj, std::move(v));
  }
  if (g.field == Field::Q)
    for (const Vec& v : g.table)
      for (const Scalar& s : v)
        if (!s.is_rational()) throw JsonError(path, "complex entries in a Q algebra");
  return g;
}

Json rep_to_json(const Representation& r) {
  Json actions = Json::array();
  for (const Matrix& m : r.actions) actions.push_back(matrix_to_json(m));
  return Json{{"algebra", algebra_to_json(r.algebra)},
              {"dim", r.dim},
              {"field", field_to_string(r.module_field)},
              {"actions", std::move(actions)}};
}

Representation rep_from_json(const Json& j, const std::string& path, const std::string& base_dir) {
  if (!j.is_object()) throw JsonError(path, "representation must be an object");
  for (const char* key : {"algebra", "dim", "actions"})
    if (!j.contains(key)) throw JsonError(path, std::string("representation needs '") + key + "'");
  Representation r;
  const Json& alg = j.at("algebra");
  if (alg.is_string()) {
    std::string file = alg.get<std::string>();
    if (!base_dir.empty()) file = base_dir + "/" + file;
    r.algebra = algebra_from_json(load_json_file(file), path + ".algebra<" + file + ">");
  } else {
    r.algebra = algebra_from_json(alg, path + ".algebra");
  }
  r.dim = int_from_json(j.at("dim"), path + ".dim");
  r.module_field =
      j.contains("field") ? field_from_json(j.at("field"), path + ".field") : r.algebra.field;
  const Json& actions = j.at("actions");
  if (!actions.is_array() || static_cast<int>(actions.size()) != r.algebra.dim)
    throw JsonError(path + ".actions", "needs one action matrix per algebra basis element");
  for (size_t i = 0; i < actions.size(); ++i) {
    Matrix m = matrix_from_json(actions.at(i), path + ".actions[" + std::to_string(i) + "]");
    if (m.rows != r.dim || m.cols != r.dim)
      throw JsonError(path + ".actions[" + std::to_string(i) + "]", "action matrix shape mismatch");
    r.actions.push_back(std::move(m));
  }
  RepCheckResult rc = check_representation(r);
  if (!rc.ok)
    throw JsonError(path, "action matrices violate the commutator identity at pair (" +
                              std::to_string(rc.i) + "," + std::to_string(rc.j) + ")");
  return r;
}

Json salgebra_to_json(const SAlgebra& a) {
  Json actions = Json::array();
  for (const Matrix& m : a.action) actions.push_back(matrix_to_json(m));
  return Json{{"s", algebra_to_json(a.s)},
              {"n", algebra_to_json(a.n)},
              {"action", std::move(actions)}};
}

SAlgebra salgebra_from_json(const Json& j, const std::string& path, const std::string& base_dir) {
  if (!j.is_object()) throw JsonError(path, "s-algebra must be an object");
  for (const char* key : {"s", "n", "action"})
    if (!j.contains(key)) throw JsonError(path, std::string("s-algebra needs '") + key + "'");
  SAlgebra a;
  auto load_alg = [&](const Json& part, const std::string& p) {
    if (part.is_string()) {
      std::string file = part.get<std::string>();
      if (!base_dir.empty()) file = base_dir + "/" + file;
      return algebra_from_json(load_json_file(file), p + "<" + file + ">");
    }
    return algebra_from_json(part, p);
  };
  a.s = load_alg(j.at("s"), path + ".s");
  a.n = load_alg(j.at("n"), path + ".n");
  const Json& actions = j.at("action");
  if (!actions.is_array() || static_cast<int>(actions.size()) != a.s.dim)
    throw JsonError(path + ".action", "needs one derivation matrix per s basis element");
  for (size_t i = 0; i < actions.size(); ++i) {
    Matrix m = matrix_from_json(actions.at(i), path + ".action[" + std::to_string(i) + "]");
    if (m.rows != a.n.dim || m.cols != a.n.dim)
      throw JsonError(path + ".action[" + std::to_string(i) + "]", "derivation shape mismatch");
    a.action.push_back(std::move(m));
  }
  SAlgebraCheck chk = check_salgebra(a);
  if (!chk.ok) throw JsonError(path, "invalid s-algebra: " + chk.what);
  return a;
}

Json tagged_to_json(const TaggedAlgebra& t) {
  Json j = algebra_to_json(t.alg);
  if (t.levi) j["levi"] = subspace_to_json(*t.levi);
  if (t.radical_tag) j["radical"] = subspace_to_json(*t.radical_tag);
  if (t.sl2_triple) {
    Json triple = Json::array();
    for (const Vec& v : *t.sl2_triple) {
      Json row = Json::array();
      for (const Scalar& s : v) row.push_back(scalar_to_json(s));
      triple.push_back(std::move(row));
    }
    j["sl2_triple"] = std::move(triple);
  }
  if (!t.provenance.is_null()) j["provenance"] = t.provenance;
  return j;
}

Json presentation_to_json(const HModulePresentation& p) {
  Json alt = Json::array();
  for (const Matrix& m : p.alt_basis) alt.push_back(matrix_to_json(m));
  return Json{{"module", rep_to_json(p.module)},
              {"alt_basis", std::move(alt)},
              {"Z", subspace_to_json(p.Z)}};
}

HModulePresentation presentation_from_json(const Json& j, const std::string& path,
                                           const std::string& base_dir) {
  if (!j.is_object() || !j.contains("module"))
    throw JsonError(path, "presentation needs a module");
  HModulePresentation p;
  p.module = rep_from_json(j.at("module"), path + ".module", base_dir);
  if (j.contains("alt_basis")) {
    const Json& alt = j.at("alt_basis");
    if (!alt.is_array()) throw JsonError(path + ".alt_basis", "must be an array of matrices");
    for (size_t i = 0; i < alt.size(); ++i)
      p.alt_basis.push_back(
          matrix_from_json(alt.at(i), path + ".alt_basis[" + std::to_string(i) + "]"));
    // the supplied basis must agree with the canonical solver basis
    FormSpace computed = invariant_forms(p.module, FormClass::Alternating);
    if (computed.basis.size() != p.alt_basis.size())
      throw JsonError(path + ".alt_basis", "Alt dimension mismatch with the module");
    for (size_t i = 0; i < computed.basis.size(); ++i)
      if (!(computed.basis[i] == p.alt_basis[i]))
        throw JsonError(path + ".alt_basis", "basis is not the canonical solver basis");
  } else {
    p.alt_basis = invariant_forms(p.module, FormClass::Alternating).basis;
  }
  if (j.contains("Z"))
    p.Z = subspace_from_json(j.at("Z"), path + ".Z");
  else
    p.Z = Subspace(p.alt_dim());
  if (p.Z.ambient != p.alt_dim())
    throw JsonError(path + ".Z", "Z has wrong ambient dimension");
  return p;
}

Json witness_to_json(const WitnessEmbedding& w) {
  Json rows = Json::array();
  for (int i = 0; i < w.basis.rows; ++i) {
    Json row = Json::array();
    for (int c = 0; c < w.basis.cols; ++c) row.push_back(scalar_to_json(w.basis.at(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"model", w.model},
              {"module_dim", w.module_dim},
              {"model_algebra", algebra_to_json(w.model_algebra)},
              {"basis", std::move(rows)}};
}

Json verdict_to_json(const Verdict& v) {
  Json j{{"question", v.question},
         {"answer", v.answer == Answer::Yes ? "yes" : v.answer == Answer::No ? "no" : "undecided"},
         {"reason", v.reason},
         {"violations", v.violations}};
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  return j;
}

Json minimality_report_to_json(const MinimalityReport& r) {
  Json summands = Json::array();
  for (auto& [n, mult] : r.summand_profile) summands.push_back(Json::array({n, mult}));
  return Json{
      {"conditions",
       Json{{"c1_two_nilpotent", r.c1},
            {"c2_bracket_generates", r.c2},
            {"c3_action_kills_derived", r.c3},
            {"c4_quotient_irreducible", r.c4 == Cond4::True       ? "true"
                                        : r.c4 == Cond4::False    ? "false"
                                                                  : "undecidable"}}},
      {"condition4_full_module", r.c4_full},
      {"verdict", r.verdict == MinimalityVerdict::Minimal        ? "minimal"
                  : r.verdict == MinimalityVerdict::AlmostMinimal ? "almost-minimal"
                                                                  : "neither"},
      {"summands", std::move(summands)},
      {"note", r.note}};
}

Json decomposition_to_json(const DecomposedAlgebra& d) {
  Json factors = Json::array();
  for (const SimpleFactor& f : d.factors) {
    Json fj{{"dim", f.space.dim()},
            {"space", subspace_to_json(f.space)},
            {"killing_signature",
             Json::array({f.killing_sig.pos, f.killing_sig.neg, f.killing_sig.zero})},
            {"compact", f.compact == Compactness::Compact},
            {"centroid_dim", f.centroid_dim}};
    fj["entry"] = f.entry ? Json(f.entry->name) : Json(nullptr);
    if (f.entry) fj["real_rank"] = f.entry->real_rank;
    factors.push_back(std::move(fj));
  }
  return Json{{"radical", subspace_to_json(d.radical)},
              {"levi", subspace_to_json(d.levi)},
              {"factors", std::move(factors)}};
}

Json load_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw JsonError(file, "cannot open file");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw JsonError(file, std::string("malformed JSON: ") + e.what());
  }
  return j;
}

}  // namespace liesalg
