#pragma once

#include "liesalg/lie_algebra.hpp"
#include "liesalg/poly.hpp"

namespace liesalg {

// Action of a Lie algebra on an exact vector space: one action matrix per
// algebra basis element. module_field may extend the algebra's field (a
// rational algebra acting Q(i)-linearly), which is how the so3 modules
// u_{4n} are assembled before realification.
struct Representation {
  LieAlgebra algebra;
  int dim = 0;
  Field module_field = Field::Q;
  std::vector<Matrix> actions;

  static Representation trivial(const LieAlgebra& g, int n);
};

struct RepCheckResult {
  bool ok = true;
  int i = -1, j = -1;  // failing basis pair
};

RepCheckResult check_representation(const Representation& rho);

enum class FormClass { All, Alternating, Symmetric };

struct FormSpace {
  FormClass cls = FormClass::All;
  int module_dim = 0;
  std::vector<Matrix> basis;
};

// Exact basis of the bilinear forms B with rho(s)^T B + B rho(s) = 0 for
// every algebra basis element, within the given symmetry class.
FormSpace invariant_forms(const Representation& rho, FormClass cls);

bool form_is_invariant(const Representation& rho, const Matrix& b);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };

struct IntertwinerResult {
  std::vector<Matrix> basis;  // maps from the first module to the second
  IsoVerdict verdict = IsoVerdict::Undecided;
  std::optional<Matrix> certificate;  // invertible intertwiner when Isomorphic
};

IntertwinerResult equivariant_maps(const Representation& a, const Representation& b);

Subspace fixed_vectors(const Representation& rho);
bool is_full_module(const Representation& rho);

// Casimir operator normalized against the Killing form.
Matrix casimir(const Representation& rho);

struct SplitFailure : ExactError {
  Poly factor;
  explicit SplitFailure(Poly f)
      : ExactError("Casimir minimal polynomial has an irrational factor: " + poly_to_string(f)),
        factor(std::move(f)) {}
};

struct IsotypicBlock {
  Rational eigenvalue;
  Subspace space;
};

std::vector<IsotypicBlock> isotypic_decomposition(const Representation& rho);

struct Sl2Report {
  std::vector<std::pair<long, int>> weights;          // (weight, multiplicity), descending
  std::vector<std::pair<long, int>> primitive_dims;   // (weight, dim of primitive space)
  std::vector<std::pair<int, int>> summands;          // (n, multiplicity of v_n), ascending n
  bool irreducible = false;
};

// Highest-weight analysis for a module over the standard (H,X,Y) sl2.
Sl2Report sl2_analysis(const Representation& rho);

bool is_sl2_standard(const LieAlgebra& g);
bool is_so3_standard(const LieAlgebra& g);

Representation direct_sum(const Representation& a, const Representation& b);
Representation tensor_product(const Representation& a, const Representation& b);

// Base change Q -> Q(i): same tables, reinterpreted.
LieAlgebra extend_scalars(const LieAlgebra& g);
Representation extend_scalars(const Representation& rho);

// An so3 action read as an sl2(Q(i)) module through the base-change
// constants H = -2i b1, X = b2 - i b3, Y = -b2 - i b3 (the inverse map is
// b1 = (i/2)H, b2 = (X-Y)/2, b3 = (i/2)(X+Y)); the commutator identity of
// the result is verified on construction.
Representation so3_module_as_sl2(const Representation& rho);

// Gaussian entry a+bi becomes the 2x2 rational block [[a,-b],[b,a]] with
// interleaved coordinates (v_0, i v_0, v_1, i v_1, ...).
Matrix realify_matrix(const Matrix& m);
LieAlgebra realify_algebra(const LieAlgebra& g);
// Realify the module of a rational algebra acting Q(i)-linearly.
Representation realify_module(const Representation& rho);

Representation restrict_module(const Representation& rho, const Subspace& invariant);
Representation quotient_module(const Representation& rho, const Subspace& invariant);

}  // namespace liesalg
