#include "liesalg/lie_algebra.hpp"

#include <algorithm>

#include "liesalg/poly.hpp"

namespace liesalg {

LieAlgebra LieAlgebra::abelian(int n, Field f) {
  LieAlgebra g;
  g.field = f;
  g.dim = n;
  g.table.assign(static_cast<size_t>(n) * (n - 1) / 2, Vec(n));
  g.default_names();
  return g;
}

void LieAlgebra::default_names() {
  basis_names.resize(dim);
  for (int i = 0; i < dim; ++i)
    if (basis_names[i].empty()) basis_names[i] = "e" + std::to_string(i);
}

void LieAlgebra::set_bracket(int i, int j, Vec v) {
  if (i >= j) throw ExactError("set_bracket expects i < j");
  if (static_cast<int>(v.size()) != dim) throw ExactError("bracket vector length mismatch");
  table[pair_index(i, j)] = std::move(v);
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return Vec(dim);
  if (i < j) return table[pair_index(i, j)];
  Vec v = table[pair_index(j, i)];
  for (auto& s : v) s = -s;
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw ExactError("bracket dimension mismatch");
  Vec r(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Scalar c = x[i] * y[j];
      const Vec& br = (i < j) ? table[pair_index(i, j)] : table[pair_index(j, i)];
      bool flip = i > j;
      for (int k = 0; k < dim; ++k) {
        if (br[k].is_zero()) continue;
        if (flip)
          r[k] -= c * br[k];
        else
          r[k] += c * br[k];
      }
    }
  }
  return r;
}

Matrix LieAlgebra::ad_basis(int i) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec br = bracket_basis(i, j);
    for (int k = 0; k < dim; ++k) m.at(k, j) = br[k];
  }
  return m;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec ej(dim);
    ej[j] = Scalar(1);
    Vec br = bracket(x, ej);
    for (int k = 0; k < dim; ++k) m.at(k, j) = br[k];
  }
  return m;
}

LieAlgebra algebra_direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field != b.field) throw ExactError("direct sum field mismatch");
  LieAlgebra g;
  g.field = a.field;
  g.dim = a.dim + b.dim;
  g.table.assign(static_cast<size_t>(g.dim) * (g.dim - 1) / 2, Vec(g.dim));
  g.basis_names.resize(g.dim);
  for (int i = 0; i < a.dim; ++i)
    g.basis_names[i] = i < static_cast<int>(a.basis_names.size()) ? a.basis_names[i]
                                                                  : "a" + std::to_string(i);
  for (int i = 0; i < b.dim; ++i)
    g.basis_names[a.dim + i] = "r." + (i < static_cast<int>(b.basis_names.size())
                                           ? b.basis_names[i]
                                           : "b" + std::to_string(i));
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      Vec v(g.dim);
      const Vec& c = a.bracket_pair(i, j);
      for (int k = 0; k < a.dim; ++k) v[k] = c[k];
      g.set_bracket(i, j, v);
    }
  for (int i = 0; i < b.dim; ++i)
    for (int j = i + 1; j < b.dim; ++j) {
      Vec v(g.dim);
      const Vec& c = b.bracket_pair(i, j);
      for (int k = 0; k < b.dim; ++k) v[a.dim + k] = c[k];
      g.set_bracket(a.dim + i, a.dim + j, v);
    }
  return g;
}

JacobiResult check_jacobi(const LieAlgebra& g) {
  JacobiResult res;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Vec bij = g.bracket_basis(i, j);
      for (int k = j + 1; k < g.dim; ++k) {
        Vec ek(g.dim), ei(g.dim), ej(g.dim);
        ek[k] = Scalar(1);
        ei[i] = Scalar(1);
        ej[j] = Scalar(1);
        Vec d = g.bracket(bij, ek);
        d = vec_add(d, g.bracket(g.bracket_basis(j, k), ei));
        d = vec_add(d, g.bracket(g.bracket_basis(k, i), ej));
        if (!vec_is_zero(d)) {
          res.ok = false;
          res.i = i;
          res.j = j;
          res.k = k;
          res.defect = d;
          return res;
        }
      }
    }
  return res;
}

Subspace derived_subspace(const LieAlgebra& g) {
  std::vector<Vec> rows;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Vec b = g.bracket_pair(i, j);
      if (!vec_is_zero(b)) rows.push_back(b);
    }
  return Subspace::from_vectors(rows, g.dim);
}

Subspace center_subspace(const LieAlgebra& g) {
  std::vector<Matrix> ads;
  for (int i = 0; i < g.dim; ++i) ads.push_back(g.ad_basis(i));
  return Subspace::from_rows(kernel_basis(vstack(ads)));
}

Matrix killing_matrix(const LieAlgebra& g) {
  if (g.field != Field::Q) throw ExactError("killing_matrix requires field Q");
  std::vector<Matrix> ads;
  for (int i = 0; i < g.dim; ++i) ads.push_back(g.ad_basis(i));
  Matrix k(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = i; j < g.dim; ++j) {
      // tr(ad_i ad_j) without forming the product
      Scalar t;
      for (int p = 0; p < g.dim; ++p)
        for (int q = 0; q < g.dim; ++q)
          if (!ads[i].at(p, q).is_zero() && !ads[j].at(q, p).is_zero())
            t += ads[i].at(p, q) * ads[j].at(q, p);
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

Subspace radical_subspace(const LieAlgebra& g) {
  Subspace d = derived_subspace(g);
  if (d.dim() == 0) return Subspace::full(g.dim);  // abelian
  Matrix k = killing_matrix(g);
  return Subspace::from_rows(kernel_basis(d.basis * k));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      Vec v = g.bracket(a.basis.row(i), b.basis.row(j));
      if (!vec_is_zero(v)) rows.push_back(v);
    }
  return Subspace::from_vectors(rows, g.dim);
}

bool is_solvable(const LieAlgebra& g, const Subspace& sub) {
  Subspace cur = sub;
  while (cur.dim() > 0) {
    Subspace next = bracket_span(g, cur, cur);
    if (next.dim() == cur.dim()) return false;
    cur = next;
  }
  return true;
}

bool is_solvable(const LieAlgebra& g) { return is_solvable(g, Subspace::full(g.dim)); }

Subspace subalgebra_generated(const LieAlgebra& g, const std::vector<Vec>& gens) {
  Subspace cur = Subspace::from_vectors(gens, g.dim);
  for (;;) {
    Subspace next = subspace_sum(cur, bracket_span(g, cur, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

Subspace ideal_closure(const LieAlgebra& g, const std::vector<Vec>& gens) {
  Subspace cur = Subspace::from_vectors(gens, g.dim);
  Subspace whole = Subspace::full(g.dim);
  for (;;) {
    Subspace next = subspace_sum(cur, bracket_span(g, whole, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& sub) {
  for (int i = 0; i < sub.dim(); ++i)
    for (int j = i + 1; j < sub.dim(); ++j)
      if (!sub.contains(g.bracket(sub.basis.row(i), sub.basis.row(j)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& sub) {
  for (int i = 0; i < g.dim; ++i) {
    Vec ei(g.dim);
    ei[i] = Scalar(1);
    for (int j = 0; j < sub.dim(); ++j)
      if (!sub.contains(g.bracket(ei, sub.basis.row(j)))) return false;
  }
  return true;
}

RestrictedAlgebra restrict_to_subalgebra(const LieAlgebra& g, const Subspace& sub) {
  RestrictedAlgebra res;
  res.basis = sub.basis;
  LieAlgebra& a = res.alg;
  a.field = g.field;
  a.dim = sub.dim();
  a.table.assign(static_cast<size_t>(a.dim) * (a.dim - 1) / 2, Vec(a.dim));
  a.default_names();
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      Vec br = g.bracket(sub.basis.row(i), sub.basis.row(j));
      auto coords = sub.coordinates(br);
      if (!coords) throw ExactError("restrict_to_subalgebra: subspace not bracket-closed");
      a.set_bracket(i, j, *coords);
    }
  return res;
}

QuotientAlgebra quotient_by_ideal(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw ExactError("quotient_by_ideal: not an ideal");
  std::vector<int> pivots;
  for (int i = 0; i < ideal.dim(); ++i)
    for (int j = 0; j < g.dim; ++j)
      if (!ideal.basis.at(i, j).is_zero()) {
        pivots.push_back(j);
        break;
      }
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int j = 0; j < g.dim; ++j) {
      if (p < pivots.size() && pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  int q = static_cast<int>(free_cols.size());
  QuotientAlgebra res;
  // projection: reduce modulo the ideal's RREF rows, keep free coordinates
  res.projection = Matrix(q, g.dim);
  for (int j = 0; j < g.dim; ++j) {
    Vec ej(g.dim);
    ej[j] = Scalar(1);
    for (int r = 0; r < ideal.dim(); ++r) {
      Scalar f = ej[pivots[r]];
      if (f.is_zero()) continue;
      for (int c = 0; c < g.dim; ++c) ej[c] -= f * ideal.basis.at(r, c);
    }
    for (int a = 0; a < q; ++a) res.projection.at(a, j) = ej[free_cols[a]];
  }
  res.lift = Matrix(g.dim, q);
  for (int a = 0; a < q; ++a) res.lift.at(free_cols[a], a) = Scalar(1);
  LieAlgebra& alg = res.alg;
  alg.field = g.field;
  alg.dim = q;
  alg.table.assign(static_cast<size_t>(q) * (q - 1) / 2, Vec(q));
  alg.basis_names.resize(q);
  for (int a = 0; a < q; ++a)
    alg.basis_names[a] = (free_cols[a] < static_cast<int>(g.basis_names.size()))
                             ? g.basis_names[free_cols[a]]
                             : "e" + std::to_string(free_cols[a]);
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      Vec br = g.bracket_basis(free_cols[a], free_cols[b]);
      alg.set_bracket(a, b, matvec(res.projection, br));
    }
  // morphism check: projection([x,y]) = [projection(x), projection(y)]
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Vec lhs = matvec(res.projection, g.bracket_basis(i, j));
      Vec rhs = alg.bracket(res.projection.col(i), res.projection.col(j));
      if (lhs != rhs) throw ExactError("quotient projection is not a Lie morphism");
    }
  return res;
}

std::vector<Matrix> intertwiner_basis(const std::vector<Matrix>& as, const std::vector<Matrix>& bs) {
  if (as.size() != bs.size()) throw ExactError("intertwiner generator count mismatch");
  if (as.empty()) throw ExactError("intertwiner with no generators");
  int m = as[0].rows, n = bs[0].rows;
  auto equation_matrix = [&](const Matrix& a, const Matrix& b) {
    // rows: equations (p,q); cols: unknowns T_{rs} at index r*m+s
    Matrix e(n * m, n * m);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < m; ++q) {
        int row = p * m + q;
        for (int k = 0; k < m; ++k)
          if (!a.at(k, q).is_zero()) e.at(row, p * m + k) += a.at(k, q);
        for (int k = 0; k < n; ++k)
          if (!b.at(p, k).is_zero()) e.at(row, k * m + q) -= b.at(p, k);
      }
    return e;
  };
  Matrix sol;  // rows span the current solution space of vec(T)
  bool first = true;
  for (size_t g = 0; g < as.size(); ++g) {
    if (as[g].is_zero() && bs[g].is_zero()) continue;
    Matrix e = equation_matrix(as[g], bs[g]);
    if (first) {
      sol = kernel_basis(e);
      first = false;
    } else {
      Matrix restricted = e * sol.transpose();  // (nm x k)
      Matrix coeff = kernel_basis(restricted);  // rows over the k coefficients
      sol = coeff * sol;
    }
    if (sol.rows == 0) break;
  }
  if (first) sol = Matrix::identity(n * m);  // all generators zero
  std::vector<Matrix> basis;
  for (int i = 0; i < sol.rows; ++i) basis.push_back(vec_to_matrix(sol.row(i), n, m));
  return basis;
}

namespace {

Matrix matrix_poly_eval(const Poly& p, const Matrix& t) {
  Matrix acc(t.rows, t.cols);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * t;
    for (int i = 0; i < t.rows; ++i) acc.at(i, i) += Scalar(*it);
  }
  return acc;
}

bool is_scalar_matrix(const Matrix& t) {
  for (int i = 0; i < t.rows; ++i)
    for (int j = 0; j < t.cols; ++j)
      if (i != j && !t.at(i, j).is_zero()) return false;
  for (int i = 1; i < t.rows; ++i)
    if (t.at(i, i) != t.at(0, 0)) return false;
  return true;
}

}  // namespace

std::vector<SimpleIdeal> simple_ideal_decomposition(const LieAlgebra& g) {
  if (g.field != Field::Q) throw ExactError("simple_ideal_decomposition requires field Q");
  if (radical_subspace(g).dim() != 0) throw NotSemisimpleError("algebra is not semisimple");
  std::vector<Matrix> ads;
  for (int i = 0; i < g.dim; ++i) ads.push_back(g.ad_basis(i));

  struct Block {
    Subspace space;
    int centroid = 0;  // 0 = not yet certified simple
  };
  std::vector<Block> blocks{{Subspace::full(g.dim), 0}};

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Block> next;
    for (Block& blk : blocks) {
      if (blk.centroid > 0) {
        next.push_back(blk);
        continue;
      }
      const Subspace& B = blk.space;
      // actions of all of g restricted to the ideal B, in B coordinates
      std::vector<Matrix> restricted;
      for (const Matrix& ad : ads) {
        Matrix r(B.dim(), B.dim());
        for (int j = 0; j < B.dim(); ++j) {
          Vec img = matvec(ad, B.basis.row(j));
          auto coords = B.coordinates(img);
          if (!coords) throw ExactError("decomposition block is not an ideal");
          for (int i = 0; i < B.dim(); ++i) r.at(i, j) = (*coords)[i];
        }
        restricted.push_back(std::move(r));
      }
      std::vector<Matrix> comm = intertwiner_basis(restricted, restricted);
      if (comm.size() == 1) {
        next.push_back({B, 1});
        continue;
      }
      bool split = false;
      for (const Matrix& t : comm) {
        if (is_scalar_matrix(t)) continue;
        Poly p = minimal_polynomial(t);
        if (poly_degree(poly_gcd(p, poly_derivative(p))) > 0)
          throw DecompositionUndecided("centralizer element is not semisimple");
        RationalRoots rr = rational_roots(p);
        if (rr.roots.empty()) continue;
        if (rr.roots.size() == 1 && poly_degree(rr.cofactor) == 0) continue;  // scalar; skipped above
        std::vector<Subspace> parts;
        for (const auto& [root, mult] : rr.roots) {
          Matrix shifted = t;
          for (int i = 0; i < t.rows; ++i) shifted.at(i, i) -= Scalar(root);
          parts.push_back(Subspace::from_rows(kernel_basis(shifted)));
        }
        if (poly_degree(rr.cofactor) > 0)
          parts.push_back(Subspace::from_rows(kernel_basis(matrix_poly_eval(rr.cofactor, t))));
        int total = 0;
        for (const auto& part : parts) total += part.dim();
        if (total != B.dim()) throw DecompositionUndecided("primary components do not fill the block");
        for (const auto& part : parts)
          next.push_back({Subspace::from_rows(part.basis * B.basis), 0});
        split = true;
        changed = true;
        break;
      }
      if (split) continue;
      // No centralizer element splits rationally. A two-dimensional
      // commutative algebra generated by one element with irreducible
      // minimal polynomial is a field, so the block is simple.
      if (comm.size() == 2) {
        for (const Matrix& t : comm) {
          if (is_scalar_matrix(t)) continue;
          Poly p = minimal_polynomial(t);
          if (poly_degree(p) == 2 && quadratic_irreducible(p[1], p[0])) {
            next.push_back({B, 2});
            split = true;
            break;
          }
        }
        if (split) continue;
      }
      throw DecompositionUndecided("cannot certify simplicity of a block (centroid dim " +
                                   std::to_string(comm.size()) + ")");
    }
    blocks = std::move(next);
  }

  // postconditions: dims fill, pairwise Killing-orthogonal
  int total = 0;
  for (const auto& b : blocks) total += b.space.dim();
  if (total != g.dim) throw ExactError("simple ideals do not sum to the algebra");
  Matrix k = killing_matrix(g);
  for (size_t x = 0; x < blocks.size(); ++x)
    for (size_t y = x + 1; y < blocks.size(); ++y) {
      Matrix prod = blocks[x].space.basis * k * blocks[y].space.basis.transpose();
      if (!prod.is_zero()) throw ExactError("simple ideals are not Killing-orthogonal");
    }
  std::vector<SimpleIdeal> out;
  for (auto& b : blocks) out.push_back({b.space, b.centroid});
  std::sort(out.begin(), out.end(), [](const SimpleIdeal& a, const SimpleIdeal& b) {
    // deterministic order: by first pivot column of the canonical basis
    auto key = [](const SimpleIdeal& s) {
      for (int j = 0; j < s.space.ambient; ++j)
        if (s.space.dim() > 0 && !s.space.basis.at(0, j).is_zero()) return j;
      return s.space.ambient;
    };
    return key(a) < key(b);
  });
  return out;
}

Compactness compactness_classify(const LieAlgebra& g, const Subspace& ideal) {
  RestrictedAlgebra r = restrict_to_subalgebra(g, ideal);
  if (radical_subspace(r.alg).dim() != 0) throw ExactError("compactness_classify: ideal not semisimple");
  if (simple_ideal_decomposition(r.alg).size() != 1)
    throw ExactError("compactness_classify: ideal not simple");
  Inertia in = signature(killing_matrix(r.alg));
  return (in.pos == 0 && in.zero == 0) ? Compactness::Compact : Compactness::Noncompact;
}

}  // namespace liesalg
