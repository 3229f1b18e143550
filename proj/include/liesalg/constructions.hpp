#pragma once

#include <json.hpp>

#include "liesalg/salgebra.hpp"

namespace liesalg {

// Algebra with optional decomposition tags and construction provenance.
struct TaggedAlgebra {
  LieAlgebra alg;
  std::optional<Subspace> levi;
  std::optional<Subspace> radical_tag;
  std::optional<std::array<Vec, 3>> sl2_triple;  // (H,X,Y) coordinates
  nlohmann::json provenance;
};

// A pair (full module v, subspace Z of Alt_s(v)*) presenting the almost
// minimal algebra h(v)/Z. Dual coordinates are taken against the canonical
// solver basis of Alt_s(v).
struct HModulePresentation {
  Representation module;
  std::vector<Matrix> alt_basis;
  Subspace Z;  // subspace of Q^d, d = alt_basis.size()

  int alt_dim() const { return static_cast<int>(alt_basis.size()); }
  int presented_dim() const { return module.dim + alt_dim() - Z.dim(); }
};

TaggedAlgebra build_sl2();
TaggedAlgebra build_so3();
TaggedAlgebra build_sp4();
Representation sp4_standard_rep();
Representation so3_standard_rep();

// v_n: H.e_i = (n-1-2i) e_i, X.e_i = (n-i) e_{i-1}, Y.e_i = (i+1) e_{i+1},
// and the invariant form phi_n(e_i, e_{n-1-i}) = (-1)^i C(n-1, i).
struct VnModule {
  Representation rep;
  Matrix phi;
};
VnModule build_vn(int n);

Rational binomial(int n, int k);

// h(v) = v + Alt_s(v)* with [(x,z),(x',z')] = (0, e_{x,x'}); Z = 0.
HModulePresentation h_of_module(const Representation& v);
HModulePresentation with_center_killed(const HModulePresentation& p, const Subspace& z);

// Realize the presented algebra h(v)/Z as an s-algebra: basis is the module
// basis followed by the surviving dual coordinates.
SAlgebra presented_salgebra(const HModulePresentation& p);
TaggedAlgebra presented_semidirect(const HModulePresentation& p);

// h_{2m+1} = h(v_{2m}) with its sl2 action; dim must be odd and >= 3.
SAlgebra build_heisenberg(int dim);

struct DerivationFailure : ExactError {
  int i, j;
  DerivationFailure(int i_, int j_)
      : ExactError("action matrix is not a derivation (witness basis pair " + std::to_string(i_) +
                   "," + std::to_string(j_) + ")"),
        i(i_),
        j(j_) {}
};

// s semidirect n, block-wise structure constants; Jacobi re-verified.
TaggedAlgebra semidirect(const LieAlgebra& s, const LieAlgebra& n,
                         const std::vector<Matrix>& action);
TaggedAlgebra semidirect(const SAlgebra& a);

// so3 module families: d_{2n+1} as harmonic polynomials, u_{4n} as the
// realification of v_{2n} over Q(i) through so3 x Q(i) = sl2(Q(i)),
// hu_{4n}^i = h(u_{4n}) / Z_i with Z_i the span of the first 3-i dual
// coordinates.
Representation build_d_module(int n);   // d_{2n+1}, n >= 1
Representation build_u_module(int n);   // u_{4n},  n >= 1
HModulePresentation build_hu(int n, int i);

std::vector<std::vector<int>> symmetric_power_exponents(int vars, int degree);
Representation build_symmetric_power(const Representation& v, int k);

// Invariant form induced on S^k by a form omega on V:
// <v_1...v_k, w_1...w_k> = sum over permutations of prod omega(v_a, w_sigma(a)).
Matrix induced_symmetric_power_form(const Matrix& omega, int vars, int k);

// g_P = s semidirect h(v)/P for a 2-plane P in the dual of Alt_s(v).
TaggedAlgebra build_family_member(const Representation& v, const Subspace& p);

// Default desk-scale module for the continuous family: v2+v4+v6+v8 over sl2.
Representation default_family_module();

// Catalog models used by the decision engine's recognition tests.
TaggedAlgebra build_sl3();
TaggedAlgebra build_su3();
TaggedAlgebra build_su21();
TaggedAlgebra build_so_pq(int p, int q);
TaggedAlgebra build_sl2c_real();
TaggedAlgebra build_sp21();

// Structure constants of a bracket-closed list of k x k matrices.
LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis, Field field,
                                 const std::vector<std::string>& names);

}  // namespace liesalg
