#pragma once

#include <string>
#include <vector>

#include "liesalg/subspace.hpp"

namespace liesalg {

// Finite-dimensional Lie algebra as a structure-constant table over the
// declared field. Only brackets [b_i, b_j] with i < j are stored;
// antisymmetry is a storage convention. Constructors are expected to emit
// Jacobi-valid tables; check_jacobi verifies.
struct LieAlgebra {
  Field field = Field::Q;
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Vec> table;  // pair_index(i,j) -> coefficient vector of [b_i,b_j]

  static LieAlgebra abelian(int n, Field f = Field::Q);

  int pair_index(int i, int j) const { return i * dim - i * (i + 1) / 2 + (j - i - 1); }

  const Vec& bracket_pair(int i, int j) const { return table[pair_index(i, j)]; }
  void set_bracket(int i, int j, Vec v);

  Vec bracket_basis(int i, int j) const;  // any i, j
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad_basis(int i) const;  // ad(b_i), columns are [b_i, b_j]
  Matrix ad(const Vec& x) const;

  void default_names();
};

LieAlgebra algebra_direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct JacobiResult {
  bool ok = true;
  int i = -1, j = -1, k = -1;
  Vec defect;
};

JacobiResult check_jacobi(const LieAlgebra& g);

Subspace derived_subspace(const LieAlgebra& g);
Subspace center_subspace(const LieAlgebra& g);

// K(b_i,b_j) = tr(ad b_i ad b_j); rational algebras only.
Matrix killing_matrix(const LieAlgebra& g);

// Radical as the Killing-orthogonal of the derived subalgebra
// (characteristic-zero criterion).
Subspace radical_subspace(const LieAlgebra& g);

// Derived series of a bracket-closed subspace; solvable iff it reaches 0.
bool is_solvable(const LieAlgebra& g, const Subspace& sub);
bool is_solvable(const LieAlgebra& g);

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace subalgebra_generated(const LieAlgebra& g, const std::vector<Vec>& gens);
Subspace ideal_closure(const LieAlgebra& g, const std::vector<Vec>& gens);
bool is_subalgebra(const LieAlgebra& g, const Subspace& sub);
bool is_ideal(const LieAlgebra& g, const Subspace& sub);

struct RestrictedAlgebra {
  LieAlgebra alg;
  Matrix basis;  // rows: subalgebra basis in parent coordinates
};

// Structure constants of a bracket-closed subspace in its canonical basis.
RestrictedAlgebra restrict_to_subalgebra(const LieAlgebra& g, const Subspace& sub);

struct QuotientAlgebra {
  LieAlgebra alg;
  Matrix projection;  // alg.dim x g.dim
  Matrix lift;        // g.dim x alg.dim, section of the projection
};

// Quotient by an ideal, on the complement of the ideal's pivot coordinates.
// The projection is verified to be a Lie morphism.
QuotientAlgebra quotient_by_ideal(const LieAlgebra& g, const Subspace& ideal);

struct NotSemisimpleError : ExactError {
  using ExactError::ExactError;
};
struct DecompositionUndecided : ExactError {
  using ExactError::ExactError;
};

struct SimpleIdeal {
  Subspace space;
  int centroid_dim = 1;  // dim of the commutant of ad on this ideal
};

// Pairwise Killing-orthogonal simple ideals of a semisimple algebra, found
// by splitting along rational eigenvalues of centralizer elements.
std::vector<SimpleIdeal> simple_ideal_decomposition(const LieAlgebra& g);

enum class Compactness { Compact, Noncompact };

// A simple ideal is compact iff its Killing form is negative definite
// (real-form semantics for g tensor R).
Compactness compactness_classify(const LieAlgebra& g, const Subspace& ideal);

// Basis of {T : T a_i = b_i T for all i}; maps from the space the a_i act
// on into the space the b_i act on.
std::vector<Matrix> intertwiner_basis(const std::vector<Matrix>& as, const std::vector<Matrix>& bs);

}  // namespace liesalg
