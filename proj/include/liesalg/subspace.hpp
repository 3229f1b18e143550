#pragma once

#include <string>

#include "liesalg/matrix.hpp"

namespace liesalg {

// Subspace of K^n, held as the canonical RREF spanning matrix. Two
// subspaces are equal as sets iff their basis grids are identical.
struct Subspace {
  int ambient = 0;
  Matrix basis;  // rank x ambient, rows in RREF with increasing pivots

  Subspace() = default;
  explicit Subspace(int ambient_dim) : ambient(ambient_dim), basis(0, ambient_dim) {}

  static Subspace from_rows(const Matrix& rows);
  static Subspace from_vectors(const std::vector<Vec>& vectors, int ambient_dim);
  static Subspace full(int ambient_dim);

  int dim() const { return basis.rows; }
  bool is_zero() const { return basis.rows == 0; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in this basis; nullopt if v is outside the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient == y.ambient && x.basis == y.basis;
  }
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

enum class SubspaceOrder { Equal, AInB, BInA, Incomparable };

struct SubspaceRelation {
  SubspaceOrder order = SubspaceOrder::Incomparable;
  int intersection_dim = 0;
  int sum_dim = 0;
};

SubspaceRelation subspace_relate(const Subspace& a, const Subspace& b);

std::string subspace_order_name(SubspaceOrder o);

}  // namespace liesalg
