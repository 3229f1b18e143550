#include "liesalg/representation.hpp"

#include <algorithm>
#include <map>

namespace liesalg {

Representation Representation::trivial(const LieAlgebra& g, int n) {
  Representation r;
  r.algebra = g;
  r.dim = n;
  r.module_field = g.field;
  r.actions.assign(g.dim, Matrix(n, n));
  return r;
}

RepCheckResult check_representation(const Representation& rho) {
  RepCheckResult res;
  if (static_cast<int>(rho.actions.size()) != rho.algebra.dim)
    throw ExactError("representation has wrong number of action matrices");
  for (const Matrix& m : rho.actions)
    if (m.rows != rho.dim || m.cols != rho.dim)
      throw ExactError("action matrix has wrong shape");
  for (int i = 0; i < rho.algebra.dim; ++i)
    for (int j = i + 1; j < rho.algebra.dim; ++j) {
      Vec br = rho.algebra.bracket_pair(i, j);
      Matrix expect(rho.dim, rho.dim);
      for (int k = 0; k < rho.algebra.dim; ++k)
        if (!br[k].is_zero()) expect = expect + rho.actions[k].scaled(br[k]);
      Matrix got = rho.actions[i] * rho.actions[j] - rho.actions[j] * rho.actions[i];
      if (!(got == expect)) {
        res.ok = false;
        res.i = i;
        res.j = j;
        return res;
      }
    }
  return res;
}

namespace {

// Unknown indexing per symmetry class; fold(p,q) returns (index, sign) of
// the unknown carrying B_{pq}, or index -1 when B_{pq} is structurally 0.
struct FormUnknowns {
  FormClass cls;
  int m;
  int count() const {
    if (cls == FormClass::All) return m * m;
    if (cls == FormClass::Alternating) return m * (m - 1) / 2;
    return m * (m + 1) / 2;
  }
  int upper_index(int p, int q) const {  // p < q, strict upper triangle
    return p * m + q - (p + 1) * (p + 2) / 2;
  }
  std::pair<int, int> fold(int p, int q) const {
    if (cls == FormClass::All) return {p * m + q, 1};
    if (cls == FormClass::Alternating) {
      if (p == q) return {-1, 0};
      if (p < q) return {upper_index(p, q), 1};
      return {upper_index(q, p), -1};
    }
    if (p <= q) return {p * m + q - p * (p + 1) / 2, 1};
    return {q * m + p - q * (q + 1) / 2, 1};
  }
  void unfold(int idx, int& p, int& q) const {
    if (cls == FormClass::All) {
      p = idx / m;
      q = idx % m;
      return;
    }
    if (cls == FormClass::Alternating) {
      for (p = 0; p < m; ++p) {
        int rowlen = m - p - 1;
        if (idx < rowlen) {
          q = p + 1 + idx;
          return;
        }
        idx -= rowlen;
      }
    } else {
      for (p = 0; p < m; ++p) {
        int rowlen = m - p;
        if (idx < rowlen) {
          q = p + idx;
          return;
        }
        idx -= rowlen;
      }
    }
    throw ExactError("unfold index out of range");
  }
};

bool is_diagonal(const Matrix& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

FormSpace invariant_forms(const Representation& rho, FormClass cls) {
  const int m = rho.dim;
  FormUnknowns U{cls, m};
  const int total = U.count();

  // Pass 1: diagonal generators force B_{pq} = 0 unless d_p + d_q = 0.
  std::vector<bool> alive(total, true);
  std::vector<const Matrix*> general;
  for (const Matrix& g : rho.actions) {
    if (g.is_zero()) continue;
    if (is_diagonal(g)) {
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          auto [idx, sign] = U.fold(p, q);
          (void)sign;
          if (idx < 0 || !alive[idx]) continue;
          if (!(g.at(p, p) + g.at(q, q)).is_zero()) alive[idx] = false;
        }
    } else {
      general.push_back(&g);
    }
  }
  std::vector<int> survivors;
  std::vector<int> pos(total, -1);
  for (int i = 0; i < total; ++i)
    if (alive[i]) {
      pos[i] = static_cast<int>(survivors.size());
      survivors.push_back(i);
    }

  // Pass 2: remaining generators give linear constraints on the survivors.
  std::vector<Vec> rows;
  const int ns = static_cast<int>(survivors.size());
  for (const Matrix* gp : general) {
    const Matrix& g = *gp;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Vec row(ns);
        bool nonzero = false;
        for (int k = 0; k < m; ++k) {
          if (!g.at(k, i).is_zero()) {  // (rho^T B)_{ij} involves B_{kj}
            auto [idx, sign] = U.fold(k, j);
            if (idx >= 0 && alive[idx]) {
              row[pos[idx]] += (sign > 0 ? g.at(k, i) : -g.at(k, i));
              nonzero = true;
            }
          }
          if (!g.at(k, j).is_zero()) {  // (B rho)_{ij} involves B_{ik}
            auto [idx, sign] = U.fold(i, k);
            if (idx >= 0 && alive[idx]) {
              row[pos[idx]] += (sign > 0 ? g.at(k, j) : -g.at(k, j));
              nonzero = true;
            }
          }
        }
        if (nonzero && !vec_is_zero(row)) rows.push_back(std::move(row));
      }
  }

  FormSpace out;
  out.cls = cls;
  out.module_dim = m;
  Matrix sol = rows.empty() ? Matrix::identity(ns) : kernel_basis(Matrix::from_rows(rows));
  for (int r = 0; r < sol.rows; ++r) {
    Matrix b(m, m);
    for (int c = 0; c < ns; ++c) {
      if (sol.at(r, c).is_zero()) continue;
      int p, q;
      U.unfold(survivors[c], p, q);
      if (cls == FormClass::All) {
        b.at(p, q) = sol.at(r, c);
      } else if (cls == FormClass::Alternating) {
        b.at(p, q) = sol.at(r, c);
        b.at(q, p) = -sol.at(r, c);
      } else {
        b.at(p, q) = sol.at(r, c);
        if (p != q) b.at(q, p) = sol.at(r, c);
      }
    }
    out.basis.push_back(std::move(b));
  }
  return out;
}

bool form_is_invariant(const Representation& rho, const Matrix& b) {
  for (const Matrix& g : rho.actions)
    if (!(g.transpose() * b + b * g).is_zero()) return false;
  return true;
}

IntertwinerResult equivariant_maps(const Representation& a, const Representation& b) {
  if (!(a.algebra.table == b.algebra.table && a.algebra.dim == b.algebra.dim))
    throw ExactError("equivariant_maps: modules over different algebras");
  IntertwinerResult res;
  res.basis = intertwiner_basis(a.actions, b.actions);
  const int d = static_cast<int>(res.basis.size());
  if (a.dim != b.dim || d == 0) {
    res.verdict = IsoVerdict::NotIsomorphic;
    return res;
  }
  // Vandermonde-patterned integer combinations; an invertible one exists in
  // the scalar-type cases this library constructs whenever the modules are
  // isomorphic.
  for (int t = 1; t <= d + 1; ++t) {
    Matrix combo(a.dim, a.dim);
    Scalar w(1);
    for (int i = 0; i < d; ++i) {
      combo = combo + res.basis[i].scaled(w);
      w *= Scalar(t);
    }
    if (!determinant(combo).is_zero()) {
      res.verdict = IsoVerdict::Isomorphic;
      res.certificate = combo;
      return res;
    }
  }
  res.verdict = IsoVerdict::Undecided;
  return res;
}

Subspace fixed_vectors(const Representation& rho) {
  std::vector<Matrix> nz;
  for (const Matrix& m : rho.actions)
    if (!m.is_zero()) nz.push_back(m);
  if (nz.empty()) return Subspace::full(rho.dim);
  return Subspace::from_rows(kernel_basis(vstack(nz)));
}

bool is_full_module(const Representation& rho) {
  return fixed_vectors(rho).dim() == 0 && radical_subspace(rho.algebra).dim() == 0;
}

Matrix casimir(const Representation& rho) {
  Matrix k = killing_matrix(rho.algebra);
  auto kinv = inverse(k);
  if (!kinv) throw ExactError("casimir: Killing form is degenerate");
  Matrix omega(rho.dim, rho.dim);
  for (int i = 0; i < rho.algebra.dim; ++i)
    for (int j = 0; j < rho.algebra.dim; ++j) {
      const Scalar& c = kinv->at(i, j);
      if (c.is_zero()) continue;
      omega = omega + (rho.actions[i] * rho.actions[j]).scaled(c);
    }
  return omega;
}

std::vector<IsotypicBlock> isotypic_decomposition(const Representation& rho) {
  if (rho.module_field != Field::Q) throw ExactError("isotypic_decomposition requires field Q");
  Matrix omega = casimir(rho);
  // scale to an integer matrix so rational eigenvalues become integers
  mpz_class den(1);
  for (const Scalar& s : omega.a) den = den * s.re.get_den() / gcd(den, mpz_class(s.re.get_den()));
  Matrix scaled = omega.scaled(Scalar(Rational(den)));
  Poly p = minimal_polynomial(scaled);
  RationalRoots rr = rational_roots(p);
  if (poly_degree(rr.cofactor) > 0) {
    // report the factor in terms of the unscaled Casimir eigenvalue
    Poly f = rr.cofactor;
    Rational pw(1);
    for (size_t i = f.size(); i-- > 0;) {
      f[i] *= pw;
      pw *= Rational(den);
    }
    throw SplitFailure(poly_monic(f));
  }
  std::vector<IsotypicBlock> blocks;
  for (const auto& [root, mult] : rr.roots) {
    Matrix shifted = scaled;
    for (int i = 0; i < shifted.rows; ++i) shifted.at(i, i) -= Scalar(root);
    Matrix power = shifted;
    for (int e = 1; e < mult; ++e) power = power * shifted;
    IsotypicBlock blk;
    blk.eigenvalue = root / Rational(den);
    blk.space = Subspace::from_rows(kernel_basis(power));
    blocks.push_back(std::move(blk));
  }
  int total = 0;
  for (const auto& b : blocks) total += b.space.dim();
  if (total != rho.dim) throw ExactError("isotypic blocks do not fill the module");
  std::sort(blocks.begin(), blocks.end(),
            [](const IsotypicBlock& a, const IsotypicBlock& b) { return a.eigenvalue < b.eigenvalue; });
  return blocks;
}

bool is_sl2_standard(const LieAlgebra& g) {
  if (g.dim != 3) return false;
  Vec e0(3), e1(3), e2(3);
  e0[0] = Scalar(1);
  e1[1] = Scalar(1);
  e2[2] = Scalar(1);
  return g.bracket_pair(0, 1) == vec_scaled(e1, Scalar(2)) &&
         g.bracket_pair(0, 2) == vec_scaled(e2, Scalar(-2)) && g.bracket_pair(1, 2) == e0;
}

bool is_so3_standard(const LieAlgebra& g) {
  if (g.dim != 3) return false;
  Vec e0(3), e1(3), e2(3);
  e0[0] = Scalar(1);
  e1[1] = Scalar(1);
  e2[2] = Scalar(1);
  return g.bracket_pair(0, 1) == e2 && g.bracket_pair(1, 2) == e0 &&
         g.bracket_pair(0, 2) == vec_scaled(e1, Scalar(-1));
}

Sl2Report sl2_analysis(const Representation& rho) {
  if (!is_sl2_standard(rho.algebra))
    throw ExactError("sl2_analysis requires the standard (H,X,Y) basis");
  const Matrix& h = rho.actions[0];
  const Matrix& x = rho.actions[1];
  Sl2Report rep;
  int covered = 0;
  std::map<long, Subspace> weight_spaces;
  for (long lam = rho.dim - 1; lam >= -(rho.dim - 1) && covered < rho.dim; --lam) {
    Matrix shifted = h;
    for (int i = 0; i < h.rows; ++i) shifted.at(i, i) -= Scalar(lam);
    Matrix kb = kernel_basis(shifted);
    if (kb.rows == 0) continue;
    weight_spaces.emplace(lam, Subspace::from_rows(kb));
    covered += kb.rows;
  }
  if (covered != rho.dim)
    throw ExactError("sl2_analysis: rho(H) is not diagonalizable with integer eigenvalues");
  for (auto it = weight_spaces.rbegin(); it != weight_spaces.rend(); ++it)
    rep.weights.emplace_back(it->first, it->second.dim());
  Subspace ker_x = Subspace::from_rows(kernel_basis(x));
  std::map<int, int> summands;
  for (auto& [lam, space] : weight_spaces) {
    Subspace prim = subspace_intersect(ker_x, space);
    if (prim.dim() == 0) continue;
    if (lam < 0) throw ExactError("sl2_analysis: primitive vector at negative weight");
    rep.primitive_dims.emplace_back(lam, prim.dim());
    summands[static_cast<int>(lam) + 1] += prim.dim();
  }
  int reconstructed = 0, count = 0;
  std::map<long, int> weight_check;
  for (auto& [n, mult] : summands) {
    rep.summands.emplace_back(n, mult);
    reconstructed += n * mult;
    count += mult;
    for (int i = 0; i < n; ++i) weight_check[n - 1 - 2 * i] += mult;
  }
  if (reconstructed != rho.dim) throw ExactError("sl2_analysis: summands do not fill the module");
  for (auto& [lam, mult] : rep.weights)
    if (weight_check[lam] != mult) throw ExactError("sl2_analysis: weight multiset mismatch");
  rep.irreducible = (count == 1);
  return rep;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra.table == b.algebra.table) || a.module_field != b.module_field)
    throw ExactError("direct_sum: incompatible modules");
  Representation r;
  r.algebra = a.algebra;
  r.dim = a.dim + b.dim;
  r.module_field = a.module_field;
  for (int i = 0; i < a.algebra.dim; ++i) {
    Matrix m(r.dim, r.dim);
    for (int p = 0; p < a.dim; ++p)
      for (int q = 0; q < a.dim; ++q) m.at(p, q) = a.actions[i].at(p, q);
    for (int p = 0; p < b.dim; ++p)
      for (int q = 0; q < b.dim; ++q) m.at(a.dim + p, a.dim + q) = b.actions[i].at(p, q);
    r.actions.push_back(std::move(m));
  }
  return r;
}

Representation tensor_product(const Representation& a, const Representation& b) {
  if (!(a.algebra.table == b.algebra.table) || a.module_field != b.module_field)
    throw ExactError("tensor_product: incompatible modules");
  Representation r;
  r.algebra = a.algebra;
  r.dim = a.dim * b.dim;
  r.module_field = a.module_field;
  Matrix ia = Matrix::identity(a.dim), ib = Matrix::identity(b.dim);
  for (int i = 0; i < a.algebra.dim; ++i)
    r.actions.push_back(kron(a.actions[i], ib) + kron(ia, b.actions[i]));
  return r;
}

LieAlgebra extend_scalars(const LieAlgebra& g) {
  if (g.field != Field::Q) throw ExactError("extend_scalars expects a rational algebra");
  LieAlgebra e = g;
  e.field = Field::QI;
  return e;
}

Representation so3_module_as_sl2(const Representation& rho) {
  if (!is_so3_standard(rho.algebra)) throw ExactError("so3_module_as_sl2 expects the standard so3");
  if (rho.module_field != Field::QI)
    throw ExactError("so3_module_as_sl2 expects Q(i) matrices; extend scalars first");
  Scalar im(Rational(0), Rational(1));
  LieAlgebra sl2;
  sl2.field = Field::QI;
  sl2.dim = 3;
  sl2.basis_names = {"H", "X", "Y"};
  sl2.table.assign(3, Vec(3));
  Vec h(3), x(3), y(3);
  h[0] = Scalar(1);
  x[1] = Scalar(1);
  y[2] = Scalar(1);
  sl2.set_bracket(0, 1, vec_scaled(x, Scalar(2)));
  sl2.set_bracket(0, 2, vec_scaled(y, Scalar(-2)));
  sl2.set_bracket(1, 2, h);
  Representation r;
  r.algebra = sl2;
  r.dim = rho.dim;
  r.module_field = Field::QI;
  const Matrix& a1 = rho.actions[0];
  const Matrix& a2 = rho.actions[1];
  const Matrix& a3 = rho.actions[2];
  r.actions = {a1.scaled(im).scaled(Scalar(-2)), a2 - a3.scaled(im),
               a2.scaled(Scalar(-1)) - a3.scaled(im)};
  RepCheckResult rc = check_representation(r);
  if (!rc.ok) throw ExactError("so3 base change failed the commutator identity");
  return r;
}

Representation extend_scalars(const Representation& rho) {
  Representation e = rho;
  e.algebra = rho.algebra.field == Field::Q ? extend_scalars(rho.algebra) : rho.algebra;
  e.module_field = Field::QI;
  return e;
}

Matrix realify_matrix(const Matrix& m) {
  Matrix r(2 * m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const Scalar& s = m.at(i, j);
      if (s.is_zero()) continue;
      r.at(2 * i, 2 * j) = Scalar(s.re);
      r.at(2 * i, 2 * j + 1) = Scalar(-s.im);
      r.at(2 * i + 1, 2 * j) = Scalar(s.im);
      r.at(2 * i + 1, 2 * j + 1) = Scalar(s.re);
    }
  return r;
}

LieAlgebra realify_algebra(const LieAlgebra& g) {
  if (g.field != Field::QI) throw ExactError("realify_algebra expects a Q(i) algebra");
  LieAlgebra r;
  r.field = Field::Q;
  r.dim = 2 * g.dim;
  r.table.assign(static_cast<size_t>(r.dim) * (r.dim - 1) / 2, Vec(r.dim));
  r.basis_names.resize(r.dim);
  for (int k = 0; k < g.dim; ++k) {
    std::string base =
        k < static_cast<int>(g.basis_names.size()) && !g.basis_names[k].empty()
            ? g.basis_names[k]
            : "e" + std::to_string(k);
    r.basis_names[2 * k] = base;
    r.basis_names[2 * k + 1] = "i*" + base;
  }
  Scalar iunit(Rational(0), Rational(1));
  auto to_real = [&](const Vec& c) {
    Vec v(r.dim);
    for (int k = 0; k < g.dim; ++k) {
      v[2 * k] = Scalar(c[k].re);
      v[2 * k + 1] = Scalar(c[k].im);
    }
    return v;
  };
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Vec c = g.bracket_pair(i, j);
      Vec ic = c;
      for (auto& s : ic) s *= iunit;
      Vec neg = c;
      for (auto& s : neg) s = -s;
      r.set_bracket(2 * i, 2 * j, to_real(c));
      r.set_bracket(2 * i, 2 * j + 1, to_real(ic));
      r.set_bracket(2 * i + 1, 2 * j, to_real(ic));
      r.set_bracket(2 * i + 1, 2 * j + 1, to_real(neg));
    }
  return r;
}

Representation realify_module(const Representation& rho) {
  if (rho.module_field != Field::QI) throw ExactError("realify_module expects Q(i) matrices");
  if (rho.algebra.field != Field::Q)
    throw ExactError("realify_module keeps a rational algebra; realify the algebra separately");
  Representation r;
  r.algebra = rho.algebra;
  r.dim = 2 * rho.dim;
  r.module_field = Field::Q;
  for (const Matrix& m : rho.actions) r.actions.push_back(realify_matrix(m));
  return r;
}

Representation restrict_module(const Representation& rho, const Subspace& invariant) {
  Representation r;
  r.algebra = rho.algebra;
  r.dim = invariant.dim();
  r.module_field = rho.module_field;
  for (const Matrix& m : rho.actions) {
    Matrix a(r.dim, r.dim);
    for (int j = 0; j < r.dim; ++j) {
      Vec img = matvec(m, invariant.basis.row(j));
      auto coords = invariant.coordinates(img);
      if (!coords) throw ExactError("restrict_module: subspace is not invariant");
      for (int i = 0; i < r.dim; ++i) a.at(i, j) = (*coords)[i];
    }
    r.actions.push_back(std::move(a));
  }
  return r;
}

Representation quotient_module(const Representation& rho, const Subspace& invariant) {
  std::vector<int> pivots;
  for (int i = 0; i < invariant.dim(); ++i)
    for (int j = 0; j < invariant.ambient; ++j)
      if (!invariant.basis.at(i, j).is_zero()) {
        pivots.push_back(j);
        break;
      }
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int j = 0; j < rho.dim; ++j) {
      if (p < pivots.size() && pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  int q = static_cast<int>(free_cols.size());
  Matrix proj(q, rho.dim), lift(rho.dim, q);
  for (int j = 0; j < rho.dim; ++j) {
    Vec ej(rho.dim);
    ej[j] = Scalar(1);
    for (size_t rr = 0; rr < pivots.size(); ++rr) {
      Scalar f = ej[pivots[rr]];
      if (f.is_zero()) continue;
      for (int c = 0; c < rho.dim; ++c) ej[c] -= f * invariant.basis.at(static_cast<int>(rr), c);
    }
    for (int a = 0; a < q; ++a) proj.at(a, j) = ej[free_cols[a]];
  }
  for (int a = 0; a < q; ++a) lift.at(free_cols[a], a) = Scalar(1);
  Representation r;
  r.algebra = rho.algebra;
  r.dim = q;
  r.module_field = rho.module_field;
  for (const Matrix& m : rho.actions) {
    Matrix qa = proj * m * lift;
    if (!(qa * proj == proj * m)) throw ExactError("quotient_module: subspace is not invariant");
    r.actions.push_back(std::move(qa));
  }
  return r;
}

}  // namespace liesalg
