#include "liesalg/constructions.hpp"

#include <algorithm>
#include <map>

namespace liesalg {

using nlohmann::json;

namespace {

Vec unit(int dim, int k, const Scalar& c = Scalar(1)) {
  Vec v(dim);
  v[k] = c;
  return v;
}

json rows_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rational_to_string(m.at(i, j).re));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

SAlgebraCheck check_salgebra(const SAlgebra& a) {
  SAlgebraCheck res;
  if (static_cast<int>(a.action.size()) != a.s.dim) {
    res.ok = false;
    res.what = "action count != dim s";
    return res;
  }
  RepCheckResult rc = check_representation(a.action_rep());
  if (!rc.ok) {
    res.ok = false;
    res.what = "action does not satisfy the commutator identity";
    res.i = rc.i;
    res.j = rc.j;
    return res;
  }
  for (int k = 0; k < a.s.dim; ++k) {
    const Matrix& d = a.action[k];
    for (int i = 0; i < a.n.dim; ++i)
      for (int j = i + 1; j < a.n.dim; ++j) {
        Vec lhs = matvec(d, a.n.bracket_pair(i, j));
        Vec rhs = vec_add(a.n.bracket(d.col(i), unit(a.n.dim, j)),
                          a.n.bracket(unit(a.n.dim, i), d.col(j)));
        if (lhs != rhs) {
          res.ok = false;
          res.what = "action matrix " + std::to_string(k) + " is not a derivation";
          res.i = i;
          res.j = j;
          return res;
        }
      }
  }
  if (!is_solvable(a.n)) {
    res.ok = false;
    res.what = "n is not solvable";
    return res;
  }
  if (a.s.field == Field::Q && radical_subspace(a.s).dim() != 0) {
    res.ok = false;
    res.what = "s is not semisimple";
    return res;
  }
  return res;
}

TaggedAlgebra build_sl2() {
  LieAlgebra g;
  g.field = Field::Q;
  g.dim = 3;
  g.basis_names = {"H", "X", "Y"};
  g.table.assign(3, Vec(3));
  g.set_bracket(0, 1, unit(3, 1, Scalar(2)));   // [H,X] = 2X
  g.set_bracket(0, 2, unit(3, 2, Scalar(-2)));  // [H,Y] = -2Y
  g.set_bracket(1, 2, unit(3, 0));              // [X,Y] = H
  TaggedAlgebra t;
  t.alg = g;
  t.levi = Subspace::full(3);
  t.radical_tag = Subspace(3);
  t.sl2_triple = {unit(3, 0), unit(3, 1), unit(3, 2)};
  t.provenance = json{{"construction", "sl2"}};
  return t;
}

TaggedAlgebra build_so3() {
  LieAlgebra g;
  g.field = Field::Q;
  g.dim = 3;
  g.basis_names = {"b1", "b2", "b3"};
  g.table.assign(3, Vec(3));
  g.set_bracket(0, 1, unit(3, 2));               // [b1,b2] = b3
  g.set_bracket(1, 2, unit(3, 0));               // [b2,b3] = b1
  g.set_bracket(0, 2, unit(3, 1, Scalar(-1)));   // [b3,b1] = b2
  TaggedAlgebra t;
  t.alg = g;
  t.levi = Subspace::full(3);
  t.radical_tag = Subspace(3);
  t.provenance = json{{"construction", "so3"}};
  return t;
}

LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis, Field field,
                                 const std::vector<std::string>& names) {
  const int d = static_cast<int>(basis.size());
  if (d == 0) throw ExactError("algebra_from_matrices: empty basis");
  const int k = basis[0].rows;
  Matrix bas_t(k * k, d);  // columns are vectorized basis elements
  for (int b = 0; b < d; ++b) {
    Vec v = matrix_to_vec(basis[b]);
    for (int r = 0; r < k * k; ++r) bas_t.at(r, b) = v[r];
  }
  LieAlgebra g;
  g.field = field;
  g.dim = d;
  g.basis_names = names;
  g.default_names();
  g.table.assign(static_cast<size_t>(d) * (d - 1) / 2, Vec(d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix br = basis[i] * basis[j] - basis[j] * basis[i];
      auto coords = solve(bas_t, matrix_to_vec(br));
      if (!coords) throw ExactError("algebra_from_matrices: basis not bracket-closed");
      if (field == Field::Q)
        for (const Scalar& s : *coords)
          if (!s.is_rational())
            throw ExactError("algebra_from_matrices: non-rational structure constants");
      g.set_bracket(i, j, *coords);
    }
  if (!check_jacobi(g).ok) throw ExactError("algebra_from_matrices: Jacobi failure");
  return g;
}

namespace {

Matrix e_mat(int n, int i, int j, const Scalar& c = Scalar(1)) {
  Matrix m(n, n);
  m.at(i, j) = c;
  return m;
}

}  // namespace

TaggedAlgebra build_sp4() {
  // X = [[A, B], [C, -A^T]] with B, C symmetric; Cartan elements first.
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  auto block = [&](const Matrix& a, const Matrix& b, const Matrix& c) {
    Matrix m(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m.at(i, j) = a.at(i, j);
        m.at(i, 2 + j) = b.at(i, j);
        m.at(2 + i, j) = c.at(i, j);
        m.at(2 + i, 2 + j) = -a.at(j, i);
      }
    return m;
  };
  Matrix z2(2, 2);
  basis.push_back(block(e_mat(2, 0, 0), z2, z2));
  names.push_back("h1");
  basis.push_back(block(e_mat(2, 1, 1), z2, z2));
  names.push_back("h2");
  basis.push_back(block(e_mat(2, 0, 1), z2, z2));
  names.push_back("a12");
  basis.push_back(block(e_mat(2, 1, 0), z2, z2));
  names.push_back("a21");
  Matrix sym12 = e_mat(2, 0, 1) + e_mat(2, 1, 0);
  basis.push_back(block(z2, e_mat(2, 0, 0), z2));
  names.push_back("b11");
  basis.push_back(block(z2, e_mat(2, 1, 1), z2));
  names.push_back("b22");
  basis.push_back(block(z2, sym12, z2));
  names.push_back("b12");
  basis.push_back(block(z2, z2, e_mat(2, 0, 0)));
  names.push_back("c11");
  basis.push_back(block(z2, z2, e_mat(2, 1, 1)));
  names.push_back("c22");
  basis.push_back(block(z2, z2, sym12));
  names.push_back("c12");

  TaggedAlgebra t;
  t.alg = algebra_from_matrices(basis, Field::Q, names);
  t.levi = Subspace::full(10);
  t.radical_tag = Subspace(10);
  t.provenance = json{{"construction", "sp4"}};
  return t;
}

Representation sp4_standard_rep() {
  TaggedAlgebra sp4 = build_sp4();
  Representation r;
  r.algebra = sp4.alg;
  r.dim = 4;
  r.module_field = Field::Q;
  auto block = [&](const Matrix& a, const Matrix& b, const Matrix& c) {
    Matrix m(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m.at(i, j) = a.at(i, j);
        m.at(i, 2 + j) = b.at(i, j);
        m.at(2 + i, j) = c.at(i, j);
        m.at(2 + i, 2 + j) = -a.at(j, i);
      }
    return m;
  };
  Matrix z2(2, 2);
  Matrix sym12 = e_mat(2, 0, 1) + e_mat(2, 1, 0);
  r.actions = {block(e_mat(2, 0, 0), z2, z2), block(e_mat(2, 1, 1), z2, z2),
               block(e_mat(2, 0, 1), z2, z2), block(e_mat(2, 1, 0), z2, z2),
               block(z2, e_mat(2, 0, 0), z2), block(z2, e_mat(2, 1, 1), z2),
               block(z2, sym12, z2),          block(z2, z2, e_mat(2, 0, 0)),
               block(z2, z2, e_mat(2, 1, 1)), block(z2, z2, sym12)};
  return r;
}

Representation so3_standard_rep() {
  TaggedAlgebra so3 = build_so3();
  Representation r;
  r.algebra = so3.alg;
  r.dim = 3;
  r.module_field = Field::Q;
  Matrix l1(3, 3), l2(3, 3), l3(3, 3);
  l1.at(2, 1) = Scalar(1);
  l1.at(1, 2) = Scalar(-1);
  l2.at(0, 2) = Scalar(1);
  l2.at(2, 0) = Scalar(-1);
  l3.at(1, 0) = Scalar(1);
  l3.at(0, 1) = Scalar(-1);
  r.actions = {l1, l2, l3};
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

VnModule build_vn(int n) {
  if (n < 1) throw ExactError("build_vn: n must be >= 1");
  VnModule out;
  out.rep.algebra = build_sl2().alg;
  out.rep.dim = n;
  out.rep.module_field = Field::Q;
  Matrix h(n, n), x(n, n), y(n, n);
  for (int i = 0; i < n; ++i) {
    h.at(i, i) = Scalar(n - 1 - 2 * i);
    if (i >= 1) x.at(i - 1, i) = Scalar(n - i);
    if (i + 1 < n) y.at(i + 1, i) = Scalar(i + 1);
  }
  out.rep.actions = {h, x, y};
  out.phi = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    Rational c = binomial(n - 1, i);
    if (i % 2 == 1) c = -c;
    out.phi.at(i, n - 1 - i) = Scalar(c);
  }
  return out;
}

HModulePresentation h_of_module(const Representation& v) {
  if (!is_full_module(v)) throw ExactError("h_of_module: module is not full");
  HModulePresentation p;
  p.module = v;
  p.alt_basis = invariant_forms(v, FormClass::Alternating).basis;
  p.Z = Subspace(static_cast<int>(p.alt_basis.size()));
  return p;
}

HModulePresentation with_center_killed(const HModulePresentation& p, const Subspace& z) {
  if (z.ambient != p.alt_dim()) throw ExactError("central subspace has wrong ambient dimension");
  HModulePresentation q = p;
  q.Z = z;
  return q;
}

SAlgebra presented_salgebra(const HModulePresentation& p) {
  const int m = p.module.dim;
  const int d = p.alt_dim();
  const Subspace& z = p.Z;
  // free coordinates of Z form the surviving center basis
  std::vector<int> pivots;
  for (int i = 0; i < z.dim(); ++i)
    for (int j = 0; j < d; ++j)
      if (!z.basis.at(i, j).is_zero()) {
        pivots.push_back(j);
        break;
      }
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int j = 0; j < d; ++j) {
      if (pi < pivots.size() && pivots[pi] == j)
        ++pi;
      else
        free_cols.push_back(j);
    }
  }
  const int c = static_cast<int>(free_cols.size());
  auto project_center = [&](Vec u) {  // length d -> length c, reduce mod Z
    for (size_t r = 0; r < pivots.size(); ++r) {
      Scalar f = u[pivots[r]];
      if (f.is_zero()) continue;
      for (int col = 0; col < d; ++col) u[col] -= f * z.basis.at(static_cast<int>(r), col);
    }
    Vec out(c);
    for (int a = 0; a < c; ++a) out[a] = u[free_cols[a]];
    return out;
  };

  SAlgebra a;
  a.s = p.module.algebra;
  a.n.field = p.module.module_field;
  a.n.dim = m + c;
  a.n.table.assign(static_cast<size_t>(a.n.dim) * (a.n.dim - 1) / 2, Vec(a.n.dim));
  a.n.basis_names.resize(a.n.dim);
  for (int i = 0; i < m; ++i) a.n.basis_names[i] = "e" + std::to_string(i);
  for (int i = 0; i < c; ++i) a.n.basis_names[m + i] = "z" + std::to_string(free_cols[i]);
  std::vector<Vec> image_rows;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec dual(d);
      for (int k = 0; k < d; ++k) dual[k] = p.alt_basis[k].at(i, j);
      Vec zc = project_center(std::move(dual));
      if (!vec_is_zero(zc)) image_rows.push_back(zc);
      Vec full(a.n.dim);
      for (int k = 0; k < c; ++k) full[m + k] = zc[k];
      a.n.set_bracket(i, j, full);
    }
  // the evaluation pairing must surject onto the surviving center
  if (c > 0) {
    int rank = image_rows.empty() ? 0 : rank_of(Matrix::from_rows(image_rows));
    if (rank != c) throw ExactError("presented algebra: derived part does not fill the center");
  }
  for (int k = 0; k < a.s.dim; ++k) {
    Matrix act(a.n.dim, a.n.dim);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) act.at(i, j) = p.module.actions[k].at(i, j);
    a.action.push_back(std::move(act));
  }
  return a;
}

TaggedAlgebra presented_semidirect(const HModulePresentation& p) {
  SAlgebra a = presented_salgebra(p);
  TaggedAlgebra t = semidirect(a.s, a.n, a.action);
  t.provenance = json{{"construction", "h_of_module_quotient"},
                      {"module_dim", p.module.dim},
                      {"alt_dim", p.alt_dim()},
                      {"Z", rows_to_json(p.Z.basis)}};
  return t;
}

SAlgebra build_heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0) throw ExactError("build_heisenberg: dimension must be odd and >= 3");
  VnModule v = build_vn(dim - 1);
  HModulePresentation p = h_of_module(v.rep);
  if (p.alt_dim() != 1) throw ExactError("build_heisenberg: unexpected Alt dimension");
  return presented_salgebra(p);
}

TaggedAlgebra semidirect(const LieAlgebra& s, const LieAlgebra& n,
                         const std::vector<Matrix>& action) {
  if (s.field != n.field) throw ExactError("semidirect: field mismatch");
  if (static_cast<int>(action.size()) != s.dim)
    throw ExactError("semidirect: one action matrix per s basis element required");
  // Leibniz identity, with witness pair on failure
  for (int k = 0; k < s.dim; ++k) {
    const Matrix& d = action[k];
    if (d.rows != n.dim || d.cols != n.dim) throw ExactError("semidirect: action shape mismatch");
    for (int i = 0; i < n.dim; ++i)
      for (int j = i + 1; j < n.dim; ++j) {
        Vec lhs = matvec(d, n.bracket_pair(i, j));
        Vec rhs =
            vec_add(n.bracket(d.col(i), unit(n.dim, j)), n.bracket(unit(n.dim, i), d.col(j)));
        if (lhs != rhs) throw DerivationFailure(i, j);
      }
  }
  {
    Representation rho;
    rho.algebra = s;
    rho.dim = n.dim;
    rho.module_field = n.field;
    rho.actions = action;
    RepCheckResult rc = check_representation(rho);
    if (!rc.ok)
      throw ExactError("semidirect: action violates the commutator identity at pair (" +
                       std::to_string(rc.i) + "," + std::to_string(rc.j) + ")");
  }
  const int dim = s.dim + n.dim;
  LieAlgebra g;
  g.field = s.field;
  g.dim = dim;
  g.table.assign(static_cast<size_t>(dim) * (dim - 1) / 2, Vec(dim));
  g.basis_names.resize(dim);
  for (int i = 0; i < s.dim; ++i)
    g.basis_names[i] = i < static_cast<int>(s.basis_names.size()) ? s.basis_names[i]
                                                                  : "s" + std::to_string(i);
  for (int i = 0; i < n.dim; ++i)
    g.basis_names[s.dim + i] =
        i < static_cast<int>(n.basis_names.size()) ? "n." + n.basis_names[i]
                                                   : "n" + std::to_string(i);
  for (int i = 0; i < s.dim; ++i)
    for (int j = i + 1; j < s.dim; ++j) {
      Vec c = s.bracket_pair(i, j);
      Vec v(dim);
      for (int k = 0; k < s.dim; ++k) v[k] = c[k];
      g.set_bracket(i, j, v);
    }
  for (int i = 0; i < s.dim; ++i)
    for (int a = 0; a < n.dim; ++a) {
      Vec v(dim);
      for (int b = 0; b < n.dim; ++b) v[s.dim + b] = action[i].at(b, a);
      g.set_bracket(i, s.dim + a, v);
    }
  for (int a = 0; a < n.dim; ++a)
    for (int b = a + 1; b < n.dim; ++b) {
      Vec c = n.bracket_pair(a, b);
      Vec v(dim);
      for (int k = 0; k < n.dim; ++k) v[s.dim + k] = c[k];
      g.set_bracket(s.dim + a, s.dim + b, v);
    }
  JacobiResult jac = check_jacobi(g);
  if (!jac.ok)
    throw ExactError("semidirect: Jacobi identity fails at triple (" + std::to_string(jac.i) +
                     "," + std::to_string(jac.j) + "," + std::to_string(jac.k) + ")");
  TaggedAlgebra t;
  t.alg = g;
  Matrix levi_rows(s.dim, dim), rad_rows(n.dim, dim);
  for (int i = 0; i < s.dim; ++i) levi_rows.at(i, i) = Scalar(1);
  for (int i = 0; i < n.dim; ++i) rad_rows.at(i, s.dim + i) = Scalar(1);
  t.levi = Subspace::from_rows(levi_rows);
  t.radical_tag = Subspace::from_rows(rad_rows);
  if (is_sl2_standard(s))
    t.sl2_triple = {unit(dim, 0), unit(dim, 1), unit(dim, 2)};
  t.provenance = json{{"construction", "semidirect"}, {"s_dim", s.dim}, {"n_dim", n.dim}};
  return t;
}

TaggedAlgebra semidirect(const SAlgebra& a) { return semidirect(a.s, a.n, a.action); }

std::vector<std::vector<int>> symmetric_power_exponents(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(vars, 0);
  // lexicographically descending exponent vectors summing to degree
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == vars - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Representation build_symmetric_power(const Representation& v, int k) {
  if (k < 1) throw ExactError("build_symmetric_power: k must be >= 1");
  auto exps = symmetric_power_exponents(v.dim, k);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < exps.size(); ++i) index[exps[i]] = static_cast<int>(i);
  Representation r;
  r.algebra = v.algebra;
  r.dim = static_cast<int>(exps.size());
  r.module_field = v.module_field;
  for (const Matrix& s : v.actions) {
    Matrix m(r.dim, r.dim);
    for (int col = 0; col < r.dim; ++col) {
      const auto& alpha = exps[col];
      for (int i = 0; i < v.dim; ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < v.dim; ++j) {
          if (s.at(j, i).is_zero()) continue;
          std::vector<int> beta = alpha;
          --beta[i];
          ++beta[j];
          m.at(index.at(beta), col) += Scalar(alpha[i]) * s.at(j, i);
        }
      }
    }
    r.actions.push_back(std::move(m));
  }
  return r;
}

Matrix induced_symmetric_power_form(const Matrix& omega, int vars, int k) {
  auto exps = symmetric_power_exponents(vars, k);
  const int n = static_cast<int>(exps.size());
  auto expand = [&](const std::vector<int>& alpha) {
    std::vector<int> list;
    for (int i = 0; i < vars; ++i)
      for (int c = 0; c < alpha[i]; ++c) list.push_back(i);
    return list;
  };
  // permanent by Ryser's formula
  auto permanent = [&](const std::vector<int>& a, const std::vector<int>& b) {
    Scalar total;
    const unsigned full = 1u << k;
    for (unsigned s = 1; s < full; ++s) {
      int bits = __builtin_popcount(s);
      Scalar prod(1);
      for (int row = 0; row < k && !prod.is_zero(); ++row) {
        Scalar sum;
        for (int col = 0; col < k; ++col)
          if (s & (1u << col)) sum += omega.at(a[row], b[col]);
        prod *= sum;
      }
      if (((k - bits) % 2) == 0)
        total += prod;
      else
        total -= prod;
    }
    return total;
  };
  Matrix m(n, n);
  std::vector<std::vector<int>> expansions(n);
  for (int i = 0; i < n; ++i) expansions[i] = expand(exps[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = permanent(expansions[i], expansions[j]);
  return m;
}

Representation build_d_module(int n) {
  if (n < 1) throw ExactError("build_d_module: n must be >= 1");
  Representation sym = build_symmetric_power(so3_standard_rep(), n);
  if (n == 1) return sym;
  auto exps_n = symmetric_power_exponents(3, n);
  auto exps_lo = symmetric_power_exponents(3, n - 2);
  std::map<std::vector<int>, int> lo_index;
  for (size_t i = 0; i < exps_lo.size(); ++i) lo_index[exps_lo[i]] = static_cast<int>(i);
  Matrix lap(static_cast<int>(exps_lo.size()), static_cast<int>(exps_n.size()));
  for (size_t col = 0; col < exps_n.size(); ++col)
    for (int i = 0; i < 3; ++i) {
      if (exps_n[col][i] < 2) continue;
      std::vector<int> beta = exps_n[col];
      beta[i] -= 2;
      lap.at(lo_index.at(beta), static_cast<int>(col)) =
          Scalar(exps_n[col][i] * (exps_n[col][i] - 1));
    }
  Subspace harmonic = Subspace::from_rows(kernel_basis(lap));
  if (harmonic.dim() != 2 * n + 1) throw ExactError("harmonic subspace has unexpected dimension");
  return restrict_module(sym, harmonic);
}

Representation build_u_module(int n) {
  if (n < 1) throw ExactError("build_u_module: n must be >= 1");
  VnModule v = build_vn(2 * n);
  Representation cplx = extend_scalars(v.rep);
  Scalar ihalf(Rational(0), make_rational(1, 2));
  Scalar half(make_rational(1, 2));
  // so3 x Q(i) = sl2(Q(i)): b1 = (i/2) H, b2 = (X - Y)/2, b3 = (i/2)(X + Y)
  Representation over_so3;
  over_so3.algebra = build_so3().alg;
  over_so3.dim = cplx.dim;
  over_so3.module_field = Field::QI;
  over_so3.actions = {cplx.actions[0].scaled(ihalf),
                      (cplx.actions[1] - cplx.actions[2]).scaled(half),
                      (cplx.actions[1] + cplx.actions[2]).scaled(ihalf)};
  RepCheckResult rc = check_representation(over_so3);
  if (!rc.ok) throw ExactError("so3 to sl2 base-change constants failed bracket expansion");
  return realify_module(over_so3);
}

HModulePresentation build_hu(int n, int i) {
  if (i < 0 || i > 3) throw ExactError("build_hu: i must be in 0..3");
  Representation u = build_u_module(n);
  HModulePresentation p = h_of_module(u);
  if (p.alt_dim() != 3) throw ExactError("build_hu: Alt dimension is not 3");
  Matrix rows(3 - i, 3);
  for (int r = 0; r < 3 - i; ++r) rows.at(r, r) = Scalar(1);
  return with_center_killed(p, Subspace::from_rows(rows));
}

TaggedAlgebra build_family_member(const Representation& v, const Subspace& p) {
  HModulePresentation pres = h_of_module(v);
  if (pres.alt_dim() < 3) throw ExactError("build_family_member: Alt* dimension must be >= 3");
  if (p.dim() != 2) throw ExactError("build_family_member: P must be a 2-plane");
  TaggedAlgebra t = presented_semidirect(with_center_killed(pres, p));
  if (derived_subspace(t.alg).dim() != t.alg.dim)
    throw ExactError("build_family_member: algebra is not perfect");
  t.provenance["construction"] = "family_member";
  t.provenance["P"] = rows_to_json(p.basis);
  return t;
}

Representation default_family_module() {
  Representation v = build_vn(2).rep;
  for (int n : {4, 6, 8}) v = direct_sum(v, build_vn(n).rep);
  return v;
}

TaggedAlgebra build_sl3() {
  std::vector<Matrix> basis = {e_mat(3, 0, 0) - e_mat(3, 1, 1),
                               e_mat(3, 1, 1) - e_mat(3, 2, 2),
                               e_mat(3, 0, 1),
                               e_mat(3, 0, 2),
                               e_mat(3, 1, 2),
                               e_mat(3, 1, 0),
                               e_mat(3, 2, 0),
                               e_mat(3, 2, 1)};
  TaggedAlgebra t;
  t.alg = algebra_from_matrices(
      basis, Field::Q, {"h1", "h2", "e12", "e13", "e23", "f12", "f13", "f23"});
  t.levi = Subspace::full(8);
  t.radical_tag = Subspace(8);
  t.provenance = json{{"construction", "sl3"}};
  return t;
}

namespace {

Scalar iu() { return Scalar(Rational(0), Rational(1)); }

TaggedAlgebra unitary_model(const std::vector<int>& jdiag, const std::string& name) {
  // anti-hermitian with respect to J = diag(jdiag), traceless
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  basis.push_back(e_mat(3, 0, 0, iu()) - e_mat(3, 1, 1, iu()));
  names.push_back("d1");
  basis.push_back(e_mat(3, 1, 1, iu()) - e_mat(3, 2, 2, iu()));
  names.push_back("d2");
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      if (jdiag[a] == jdiag[b]) {
        basis.push_back(e_mat(3, a, b) - e_mat(3, b, a));
        basis.push_back(e_mat(3, a, b, iu()) + e_mat(3, b, a, iu()));
      } else {
        basis.push_back(e_mat(3, a, b) + e_mat(3, b, a));
        basis.push_back(e_mat(3, a, b, iu()) - e_mat(3, b, a, iu()));
      }
      names.push_back("r" + std::to_string(a) + std::to_string(b));
      names.push_back("s" + std::to_string(a) + std::to_string(b));
    }
  TaggedAlgebra t;
  t.alg = algebra_from_matrices(basis, Field::Q, names);
  t.levi = Subspace::full(8);
  t.radical_tag = Subspace(8);
  t.provenance = json{{"construction", name}};
  return t;
}

}  // namespace

TaggedAlgebra build_su3() { return unitary_model({1, 1, 1}, "su3"); }

TaggedAlgebra build_su21() { return unitary_model({1, 1, -1}, "su21"); }

TaggedAlgebra build_so_pq(int p, int q) {
  int n = p + q;
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar ji(i < p ? 1 : -1), jj(j < p ? 1 : -1);
      basis.push_back(e_mat(n, i, j, ji) - e_mat(n, j, i, jj));
      names.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  TaggedAlgebra t;
  t.alg = algebra_from_matrices(basis, Field::Q, names);
  t.levi = Subspace::full(t.alg.dim);
  t.radical_tag = Subspace(t.alg.dim);
  t.provenance = json{{"construction", "so" + std::to_string(p) + std::to_string(q)}};
  return t;
}

TaggedAlgebra build_sl2c_real() {
  TaggedAlgebra t;
  t.alg = realify_algebra(extend_scalars(build_sl2().alg));
  t.levi = Subspace::full(6);
  t.radical_tag = Subspace(6);
  t.provenance = json{{"construction", "sl2c_real"}};
  return t;
}

namespace {

struct Quat {
  Rational r, i, j, k;
  Quat() : r(0), i(0), j(0), k(0) {}
  Quat(Rational r_, Rational i_, Rational j_, Rational k_)
      : r(std::move(r_)), i(std::move(i_)), j(std::move(j_)), k(std::move(k_)) {}
  bool is_zero() const { return r == 0 && i == 0 && j == 0 && k == 0; }
  Quat conj() const { return {r, -i, -j, -k}; }
  Quat operator+(const Quat& o) const { return {r + o.r, i + o.i, j + o.j, k + o.k}; }
  Quat operator-(const Quat& o) const { return {r - o.r, i - o.i, j - o.j, k - o.k}; }
  Quat operator-() const { return {-r, -i, -j, -k}; }
  Quat operator*(const Quat& o) const {
    return {r * o.r - i * o.i - j * o.j - k * o.k, r * o.i + i * o.r + j * o.k - k * o.j,
            r * o.j - i * o.k + j * o.r + k * o.i, r * o.k + i * o.j - j * o.i + k * o.r};
  }
};

using QuatMat = std::array<std::array<Quat, 3>, 3>;

QuatMat qmul(const QuatMat& a, const QuatMat& b) {
  QuatMat c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) c[i][j] = c[i][j] + a[i][l] * b[l][j];
  return c;
}

QuatMat qsub(const QuatMat& a, const QuatMat& b) {
  QuatMat c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}

}  // namespace

TaggedAlgebra build_sp21() {
  // X = [[a, b, c], [-conj(b), e, f], [conj(c), conj(f), l]] over the
  // rational quaternions, a, e, l imaginary; 21-dimensional over Q.
  const Quat qi(Rational(0), Rational(1), Rational(0), Rational(0));
  const Quat qj(Rational(0), Rational(0), Rational(1), Rational(0));
  const Quat qk(Rational(0), Rational(0), Rational(0), Rational(1));
  const Quat q1(Rational(1), Rational(0), Rational(0), Rational(0));
  std::vector<QuatMat> basis;
  std::vector<std::string> names;
  auto add_diag = [&](int pos, const Quat& u, const std::string& nm) {
    QuatMat m{};
    m[pos][pos] = u;
    basis.push_back(m);
    names.push_back(nm);
  };
  auto add_off = [&](int p, int q, const Quat& u, bool negate, const std::string& nm) {
    QuatMat m{};
    m[p][q] = u;
    m[q][p] = negate ? -u.conj() : u.conj();
    basis.push_back(m);
    names.push_back(nm);
  };
  const char* units = "ijk";
  const Quat unit_list[3] = {qi, qj, qk};
  for (int pos = 0; pos < 3; ++pos)
    for (int u = 0; u < 3; ++u)
      add_diag(pos, unit_list[u], std::string(1, "ael"[pos]) + units[u]);
  const Quat full_list[4] = {q1, qi, qj, qk};
  const char* fu = "1ijk";
  for (int u = 0; u < 4; ++u) add_off(0, 1, full_list[u], true, std::string("b") + fu[u]);
  for (int u = 0; u < 4; ++u) add_off(0, 2, full_list[u], false, std::string("c") + fu[u]);
  for (int u = 0; u < 4; ++u) add_off(1, 2, full_list[u], false, std::string("f") + fu[u]);

  // coordinates of a bracket in this basis, read off the parameterization
  auto coords = [&](const QuatMat& m) {
    Vec v(21);
    auto put = [&](int idx, const Rational& val) { v[idx] = Scalar(val); };
    if (m[0][0].r != 0 || m[1][1].r != 0 || m[2][2].r != 0)
      throw ExactError("sp21 bracket left the space (real diagonal)");
    put(0, m[0][0].i);
    put(1, m[0][0].j);
    put(2, m[0][0].k);
    put(3, m[1][1].i);
    put(4, m[1][1].j);
    put(5, m[1][1].k);
    put(6, m[2][2].i);
    put(7, m[2][2].j);
    put(8, m[2][2].k);
    auto put_quat = [&](int base, const Quat& q) {
      put(base, q.r);
      put(base + 1, q.i);
      put(base + 2, q.j);
      put(base + 3, q.k);
    };
    put_quat(9, m[0][1]);
    put_quat(13, m[0][2]);
    put_quat(17, m[1][2]);
    if (!(m[1][0] + m[0][1].conj()).is_zero() || !(m[2][0] - m[0][2].conj()).is_zero() ||
        !(m[2][1] - m[1][2].conj()).is_zero())
      throw ExactError("sp21 bracket left the space (hermitian shape)");
    return v;
  };

  LieAlgebra g;
  g.field = Field::Q;
  g.dim = 21;
  g.basis_names = names;
  g.table.assign(21 * 20 / 2, Vec(21));
  for (int a = 0; a < 21; ++a)
    for (int b = a + 1; b < 21; ++b)
      g.set_bracket(a, b, coords(qsub(qmul(basis[a], basis[b]), qmul(basis[b], basis[a]))));
  if (!check_jacobi(g).ok) throw ExactError("sp21: Jacobi failure");
  TaggedAlgebra t;
  t.alg = g;
  t.levi = Subspace::full(21);
  t.radical_tag = Subspace(21);
  t.provenance = json{{"construction", "sp21"}};
  return t;
}

}  // namespace liesalg
