#include "doctest.h"
#include "liesalg/constructions.hpp"

using namespace liesalg;

TEST_CASE("classical algebras") {
  SUBCASE("sl2") {
    TaggedAlgebra t = build_sl2();
    CHECK(t.alg.dim == 3);
    Inertia s = signature(killing_matrix(t.alg));
    CHECK(s.pos == 2);
    CHECK(s.neg == 1);
  }
  SUBCASE("so3") {
    TaggedAlgebra t = build_so3();
    CHECK(check_jacobi(t.alg).ok);
    Inertia s = signature(killing_matrix(t.alg));
    CHECK(s.pos == 0);
    CHECK(s.neg == 3);
  }
  SUBCASE("sp4") {
    TaggedAlgebra t = build_sp4();
    CHECK(t.alg.dim == 10);
    CHECK(radical_subspace(t.alg).dim() == 0);
    Inertia s = signature(killing_matrix(t.alg));
    CHECK(s.pos == 6);
    CHECK(s.neg == 4);
    CHECK(check_representation(sp4_standard_rep()).ok);
  }
}

TEST_CASE("v_n module formulas") {
  SUBCASE("n = 2") {
    VnModule v = build_vn(2);
    Vec e0(2), e1(2);
    e0[0] = Scalar(1);
    e1[1] = Scalar(1);
    CHECK(matvec(v.rep.actions[0], e0) == e0);                     // H.e0 = e0
    CHECK(matvec(v.rep.actions[2], e0) == e1);                     // Y.e0 = e1
    CHECK(matvec(v.rep.actions[1], e1) == e0);                     // X.e1 = e0
    CHECK(v.phi.at(0, 1) == Scalar(1));                            // phi2(e0,e1) = 1
  }
  SUBCASE("n = 1 is trivial with symmetric phi") {
    VnModule v = build_vn(1);
    for (const Matrix& m : v.rep.actions) CHECK(m.is_zero());
    CHECK(v.phi.at(0, 0) == Scalar(1));
  }
  SUBCASE("n = 4 weights and binomial values") {
    VnModule v = build_vn(4);
    Sl2Report r = sl2_analysis(v.rep);
    CHECK(r.weights == std::vector<std::pair<long, int>>{{3, 1}, {1, 1}, {-1, 1}, {-3, 1}});
    CHECK(v.phi.at(0, 3) == Scalar(1));
    CHECK(v.phi.at(1, 2) == Scalar(-3));
    CHECK((v.phi.transpose() + v.phi).is_zero());
    CHECK(form_is_invariant(v.rep, v.phi));
  }
  SUBCASE("n = 0 is rejected") { CHECK_THROWS_AS(build_vn(0), ExactError); }
  SUBCASE("for even n the alternating space is exactly span{phi}") {
    for (int n : {2, 4, 6}) {
      VnModule v = build_vn(n);
      FormSpace alt = invariant_forms(v.rep, FormClass::Alternating);
      REQUIRE(alt.basis.size() == 1);
      // phi is a scalar multiple of the basis form
      Matrix stack(1, n * n);
      Vec flat = matrix_to_vec(alt.basis[0]);
      for (int c = 0; c < n * n; ++c) stack.at(0, c) = flat[c];
      CHECK(Subspace::from_rows(stack).contains(matrix_to_vec(v.phi)));
    }
  }
}

TEST_CASE("h(v) construction") {
  SUBCASE("h(v2) is the 3-dimensional Heisenberg algebra") {
    HModulePresentation p = h_of_module(build_vn(2).rep);
    CHECK(p.alt_dim() == 1);
    SAlgebra a = presented_salgebra(p);
    CHECK(a.n.dim == 3);
    CHECK(center_subspace(a.n).dim() == 1);
    Vec br = a.n.bracket_pair(0, 1);
    CHECK(br[2] == Scalar(1));  // [e0,e1] = z, coefficient phi2(e0,e1) = 1
    CHECK(check_jacobi(a.n).ok);
    CHECK(check_salgebra(a).ok);
  }
  SUBCASE("h(v3) is abelian: Alt = 0") {
    HModulePresentation p = h_of_module(build_vn(3).rep);
    CHECK(p.alt_dim() == 0);
    SAlgebra a = presented_salgebra(p);
    CHECK(a.n.dim == 3);
    CHECK(derived_subspace(a.n).dim() == 0);
  }
  SUBCASE("h(v2+v2) has a 3-dimensional center") {
    Representation v = direct_sum(build_vn(2).rep, build_vn(2).rep);
    HModulePresentation p = h_of_module(v);
    CHECK(p.alt_dim() == 3);
    SAlgebra a = presented_salgebra(p);
    CHECK(a.n.dim == 7);
    CHECK(center_subspace(a.n).dim() == 3);
    CHECK(derived_subspace(a.n).dim() == 3);
  }
  SUBCASE("non-full module is rejected") {
    Representation bad = direct_sum(build_vn(2).rep, Representation::trivial(build_sl2().alg, 1));
    CHECK_THROWS_AS(h_of_module(bad), ExactError);
  }
  SUBCASE("dual part = derived subalgebra, central, killed by the action") {
    for (auto v : {direct_sum(build_vn(2).rep, build_vn(4).rep), build_u_module(1)}) {
      SAlgebra a = presented_salgebra(h_of_module(v));
      Subspace dn = derived_subspace(a.n);
      CHECK(dn.dim() == a.n.dim - v.dim);
      CHECK(center_subspace(a.n).contains(dn));
      for (const Matrix& act : a.action)
        for (int i = 0; i < dn.dim(); ++i)
          CHECK(vec_is_zero(matvec(act, dn.basis.row(i))));  // [s, D h(v)] = 0
    }
  }
}

TEST_CASE("central quotients of presentations") {
  HModulePresentation p = h_of_module(build_vn(2).rep);
  SUBCASE("killing the full center gives the abelian module") {
    SAlgebra a = presented_salgebra(with_center_killed(p, Subspace::full(1)));
    CHECK(a.n.dim == 2);
    CHECK(derived_subspace(a.n).dim() == 0);
  }
  SUBCASE("killing nothing returns h3 itself") {
    SAlgebra a = presented_salgebra(with_center_killed(p, Subspace(1)));
    CHECK(a.n.dim == 3);
    CHECK(a.n.table == build_heisenberg(3).n.table);
  }
  SUBCASE("hu(1,i) has dimension 4+i and an i-dimensional center") {
    for (int i : {1, 2}) {
      SAlgebra a = presented_salgebra(build_hu(1, i));
      CHECK(a.n.dim == 4 + i);
      CHECK(center_subspace(a.n).dim() == i);
    }
  }
}

TEST_CASE("heisenberg family") {
  for (int dim : {3, 5, 7}) {
    SAlgebra h = build_heisenberg(dim);
    CHECK(h.n.dim == dim);
    CHECK(center_subspace(h.n).dim() == 1);
    CHECK(derived_subspace(h.n) == center_subspace(h.n));
    CHECK(check_salgebra(h).ok);
  }
  CHECK_THROWS_AS(build_heisenberg(4), ExactError);
}

TEST_CASE("semidirect products") {
  SUBCASE("sl2 x v2") {
    TaggedAlgebra g = semidirect(build_sl2().alg, LieAlgebra::abelian(2), build_vn(2).rep.actions);
    CHECK(g.alg.dim == 5);
    CHECK(radical_subspace(g.alg) == *g.radical_tag);
    CHECK(check_jacobi(g.alg).ok);
  }
  SUBCASE("sl2 x h3 has 2-nilpotent radical") {
    SAlgebra h3 = build_heisenberg(3);
    TaggedAlgebra g = semidirect(h3);
    CHECK(g.alg.dim == 6);
    Subspace rad = radical_subspace(g.alg);
    CHECK(rad.dim() == 3);
    Subspace dr = bracket_span(g.alg, rad, rad);
    CHECK(dr.dim() == 1);
    CHECK(bracket_span(g.alg, rad, dr).dim() == 0);  // 2-nilpotent
  }
  SUBCASE("zero action gives a direct product") {
    TaggedAlgebra g =
        semidirect(build_so3().alg, LieAlgebra::abelian(2), {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)});
    CHECK(bracket_span(g.alg, *g.levi, *g.radical_tag).dim() == 0);
  }
  SUBCASE("a non-derivation is rejected with a witness pair") {
    SAlgebra h3 = build_heisenberg(3);
    std::vector<Matrix> bad = h3.action;
    bad[0].at(2, 2) = Scalar(5);  // breaks Leibniz on the center
    CHECK_THROWS_AS(semidirect(build_sl2().alg, h3.n, bad), DerivationFailure);
  }
}

TEST_CASE("so3 module families") {
  SUBCASE("d3 is the standard action") {
    Representation d3 = build_d_module(1);
    CHECK(d3.dim == 3);
    CHECK(equivariant_maps(d3, d3).basis.size() == 1);
    CHECK(invariant_forms(d3, FormClass::Alternating).basis.empty());
  }
  SUBCASE("d5 and d7 are absolutely irreducible of the right size") {
    for (int n : {2, 3}) {
      Representation d = build_d_module(n);
      CHECK(d.dim == 2 * n + 1);
      CHECK(check_representation(d).ok);
      CHECK(equivariant_maps(d, d).basis.size() == 1);
      CHECK(invariant_forms(d, FormClass::Alternating).basis.empty());
      CHECK(fixed_vectors(d).dim() == 0);
    }
  }
  SUBCASE("u4 and u8") {
    for (int n : {1, 2}) {
      Representation u = build_u_module(n);
      CHECK(u.dim == 4 * n);
      CHECK(equivariant_maps(u, u).basis.size() == 4);
      CHECK(invariant_forms(u, FormClass::Alternating).basis.size() == 3);
    }
  }
  SUBCASE("hu(1,3) = h(u4) has center dim 3") {
    SAlgebra a = presented_salgebra(build_hu(1, 3));
    CHECK(a.n.dim == 7);
    CHECK(center_subspace(a.n).dim() == 3);
  }
  SUBCASE("hu(1,0) collapses to u4") {
    SAlgebra a = presented_salgebra(build_hu(1, 0));
    CHECK(a.n.dim == 4);
    CHECK(derived_subspace(a.n).dim() == 0);
  }
}

TEST_CASE("symmetric powers") {
  SUBCASE("S^1 is the module itself") {
    Representation v = build_vn(3).rep;
    Representation s1 = build_symmetric_power(v, 1);
    CHECK(s1.actions == v.actions);
  }
  SUBCASE("S^2(v2) = v3") {
    Representation s2 = build_symmetric_power(build_vn(2).rep, 2);
    CHECK(s2.dim == 3);
    Sl2Report r = sl2_analysis(s2);
    CHECK(r.summands == std::vector<std::pair<int, int>>{{3, 1}});
  }
  SUBCASE("S^3 of the sp4 standard module has dim 20") {
    Representation s3 = build_symmetric_power(sp4_standard_rep(), 3);
    CHECK(s3.dim == 20);
    CHECK(check_representation(s3).ok);
  }
}

TEST_CASE("family members") {
  Representation v = default_family_module();
  CHECK(v.dim == 20);
  SUBCASE("alt space of the default family module is 4-dimensional") {
    CHECK(invariant_forms(v, FormClass::Alternating).basis.size() == 4);
  }
  SUBCASE("g_P is perfect of dim 25") {
    Matrix rows(2, 4);
    rows.at(0, 0) = Scalar(1);
    rows.at(0, 2) = Scalar(1);
    rows.at(1, 1) = Scalar(1);
    rows.at(1, 2) = Scalar(1);
    rows.at(1, 3) = Scalar(1);
    TaggedAlgebra g = build_family_member(v, Subspace::from_rows(rows));
    CHECK(g.alg.dim == 25);
    CHECK(derived_subspace(g.alg).dim() == 25);
  }
}

TEST_CASE("catalog models have the expected invariants") {
  struct Row {
    TaggedAlgebra t;
    int dim, pos, neg;
  };
  std::vector<Row> rows;
  rows.push_back({build_sl3(), 8, 5, 3});
  rows.push_back({build_su3(), 8, 0, 8});
  rows.push_back({build_su21(), 8, 4, 4});
  rows.push_back({build_so_pq(5, 0), 10, 0, 10});
  rows.push_back({build_so_pq(4, 1), 10, 4, 6});
  rows.push_back({build_sp21(), 21, 8, 13});
  for (const Row& r : rows) {
    CHECK(r.t.alg.dim == r.dim);
    CHECK(check_jacobi(r.t.alg).ok);
    CHECK(radical_subspace(r.t.alg).dim() == 0);
    Inertia s = signature(killing_matrix(r.t.alg));
    CHECK(s.pos == r.pos);
    CHECK(s.neg == r.neg);
    CHECK(s.zero == 0);
  }
}
