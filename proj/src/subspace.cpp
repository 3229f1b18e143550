#include "liesalg/subspace.hpp"

namespace liesalg {

Subspace Subspace::from_rows(const Matrix& rows) {
  Subspace s;
  s.ambient = rows.cols;
  RrefResult r = rref(rows);
  Matrix b(r.rank, rows.cols);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols; ++j) b.at(i, j) = r.mat.at(i, j);
  s.basis = std::move(b);
  return s;
}

Subspace Subspace::from_vectors(const std::vector<Vec>& vectors, int ambient_dim) {
  if (vectors.empty()) return Subspace(ambient_dim);
  Matrix m = Matrix::from_rows(vectors);
  if (m.cols != ambient_dim) throw ExactError("subspace vector length != ambient dim");
  return from_rows(m);
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s;
  s.ambient = ambient_dim;
  s.basis = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient) throw ExactError("subspace ambient mismatch");
  // Basis is RREF: coordinates are read off the pivot columns, then checked.
  Vec coeff(basis.rows);
  Vec rem = v;
  for (int i = 0; i < basis.rows; ++i) {
    int p = -1;
    for (int j = 0; j < ambient; ++j)
      if (!basis.at(i, j).is_zero()) {
        p = j;
        break;
      }
    coeff[i] = rem[p];
    if (!coeff[i].is_zero())
      for (int j = 0; j < ambient; ++j) rem[j] -= coeff[i] * basis.at(i, j);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coeff;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient != other.ambient) throw ExactError("subspace ambient mismatch");
  for (int i = 0; i < other.basis.rows; ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw ExactError("subspace ambient mismatch");
  return Subspace::from_rows(vstack({a.basis, b.basis}));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw ExactError("subspace ambient mismatch");
  // x in rowspace(A) iff K_A x = 0 where K_A spans ker(A); intersect by
  // stacking both annihilators.
  Matrix ka = kernel_basis(a.basis);
  Matrix kb = kernel_basis(b.basis);
  return Subspace::from_rows(kernel_basis(vstack({ka, kb})));
}

SubspaceRelation subspace_relate(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw ExactError("subspace ambient mismatch");
  SubspaceRelation rel;
  Subspace sum = subspace_sum(a, b);
  rel.sum_dim = sum.dim();
  rel.intersection_dim = a.dim() + b.dim() - rel.sum_dim;
  bool ainb = rel.intersection_dim == a.dim();
  bool bina = rel.intersection_dim == b.dim();
  if (ainb && bina)
    rel.order = SubspaceOrder::Equal;
  else if (ainb)
    rel.order = SubspaceOrder::AInB;
  else if (bina)
    rel.order = SubspaceOrder::BInA;
  else
    rel.order = SubspaceOrder::Incomparable;
  return rel;
}

std::string subspace_order_name(SubspaceOrder o) {
  switch (o) {
    case SubspaceOrder::Equal:
      return "equal";
    case SubspaceOrder::AInB:
      return "a_in_b";
    case SubspaceOrder::BInA:
      return "b_in_a";
    default:
      return "incomparable";
  }
}

}  // namespace liesalg
