#include "doctest.h"
#include "liesalg/decider.hpp"

using namespace liesalg;

namespace {

DecomposedAlgebra decompose(const TaggedAlgebra& t) { return verify_levi(t.alg, *t.levi); }

TaggedAlgebra sl2_semidirect_vn(int n) {
  return semidirect(build_sl2().alg, LieAlgebra::abelian(n), build_vn(n).rep.actions);
}

TaggedAlgebra so3_semidirect_d3() {
  return semidirect(build_so3().alg, LieAlgebra::abelian(3), build_d_module(1).actions);
}

}  // namespace

TEST_CASE("verify_levi") {
  SUBCASE("sl2 x v2: noncompact factor, radical v2") {
    DecomposedAlgebra d = decompose(sl2_semidirect_vn(2));
    CHECK(d.radical.dim() == 2);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].compact == Compactness::Noncompact);
    REQUIRE(d.factors[0].entry.has_value());
    CHECK(d.factors[0].entry->name == "sl2(R)");
  }
  SUBCASE("so3 x d3: compact factor") {
    DecomposedAlgebra d = decompose(so3_semidirect_d3());
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].compact == Compactness::Compact);
    CHECK(d.factors[0].entry->name == "so3");
  }
  SUBCASE("a basis that is not bracket-closed is rejected") {
    TaggedAlgebra g = sl2_semidirect_vn(2);
    Matrix rows(2, 5);
    rows.at(0, 1) = Scalar(1);  // span{X, e0} is not a subalgebra complementing the radical
    rows.at(1, 3) = Scalar(1);
    CHECK_THROWS_AS(verify_levi(g.alg, Subspace::from_rows(rows)), NotALeviComplement);
  }
  SUBCASE("solvable algebra has an empty Levi factor") {
    DecomposedAlgebra d = verify_levi(LieAlgebra::abelian(3), Subspace(3));
    CHECK(d.factors.empty());
    CHECK(d.radical.dim() == 3);
  }
}

TEST_CASE("M-decomposition") {
  SUBCASE("direct product is M-decomposed") {
    TaggedAlgebra g = semidirect(build_sl2().alg, LieAlgebra::abelian(2),
                                 {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)});
    CHECK(is_m_decomposed(decompose(g)).m_decomposed);
  }
  SUBCASE("sl2 x v2 is not, with a bracket witness") {
    MDecomposition m = is_m_decomposed(decompose(sl2_semidirect_vn(2)));
    CHECK(!m.m_decomposed);
    REQUIRE(m.witness.has_value());
    CHECK(!vec_is_zero(
        decompose(sl2_semidirect_vn(2)).g.bracket(m.witness->first, m.witness->second)));
  }
  SUBCASE("so3 x d3 is M-decomposed (compact factor only)") {
    CHECK(is_m_decomposed(decompose(so3_semidirect_d3())).m_decomposed);
  }
}

TEST_CASE("factor recognition via the catalog") {
  SUBCASE("built models recognize themselves") {
    CHECK(decompose(build_sl2()).factors[0].entry->name == "sl2(R)");
    CHECK(decompose(build_so3()).factors[0].entry->name == "so3");
    CHECK(decompose(build_sl2c_real()).factors[0].entry->name == "sl2(C)");
    CHECK(decompose(build_sl3()).factors[0].entry->name == "sl3(R)");
    CHECK(decompose(build_su3()).factors[0].entry->name == "su(3)");
    CHECK(decompose(build_su21()).factors[0].entry->name == "su(2,1)");
    CHECK(decompose(build_sp4()).factors[0].entry->name == "sp4(R)");
    CHECK(decompose(build_so_pq(4, 1)).factors[0].entry->name == "so(4,1)");
    CHECK(decompose(build_so_pq(5, 0)).factors[0].entry->name == "so(5)");
    CHECK(decompose(build_sp21()).factors[0].entry->name == "sp(2,1)");
  }
  SUBCASE("sl2(C) realified has centroid dimension 2") {
    DecomposedAlgebra d = decompose(build_sl2c_real());
    CHECK(d.factors[0].centroid_dim == 2);
  }
  SUBCASE("a factor outside the catalog yields undecided, never a guess") {
    TaggedAlgebra so6 = build_so_pq(6, 0);  // dim 15, not a catalog entry
    DecomposedAlgebra d = decompose(so6);
    REQUIRE(d.factors.size() == 1);
    CHECK(!d.factors[0].entry.has_value());
    CHECK(haagerup_verdict(d).answer == Answer::Undecided);
    CHECK(discrete_haagerup_criterion(d).answer == Answer::Undecided);
  }
}

TEST_CASE("witness extraction") {
  SUBCASE("sl2 x v2: the witness is the whole algebra") {
    DecomposedAlgebra d = decompose(sl2_semidirect_vn(2));
    auto w = find_witness(d);
    REQUIRE(w.has_value());
    CHECK(w->model == "sl2xv_2");
    CHECK(w->basis.rows == 5);
    CHECK(verify_witness(d, *w));
  }
  SUBCASE("sl2 x h5: witness of heisenberg type") {
    DecomposedAlgebra d = decompose(semidirect(build_heisenberg(5)));
    auto w = find_witness(d);
    REQUIRE(w.has_value());
    CHECK(w->model == "sl2xh_5");
    CHECK(w->basis.rows == 8);
    CHECK(verify_witness(d, *w));
  }
  SUBCASE("(sl2 + sl2) acting through the first factor only") {
    LieAlgebra s = algebra_direct_sum(build_sl2().alg, build_sl2().alg);
    VnModule v2 = build_vn(2);
    std::vector<Matrix> action = v2.rep.actions;
    for (int i = 0; i < 3; ++i) action.push_back(Matrix(2, 2));
    TaggedAlgebra g = semidirect(s, LieAlgebra::abelian(2), action);
    DecomposedAlgebra d = verify_levi(g.alg, *g.levi);
    auto w = find_witness(d);
    REQUIRE(w.has_value());
    CHECK(w->model == "sl2xv_2");
    CHECK(verify_witness(d, *w));
  }
  SUBCASE("M-decomposed input yields no witness") {
    CHECK(!find_witness(decompose(build_sl2())).has_value());
  }
}

TEST_CASE("haagerup verdicts") {
  SUBCASE("sl2 alone: yes") {
    Verdict v = haagerup_verdict(decompose(build_sl2()));
    CHECK(v.answer == Answer::Yes);
    CHECK(!v.witness.has_value());
  }
  SUBCASE("sl2 x v2: no, not M-decomposed, witness attached") {
    Verdict v = haagerup_verdict(decompose(sl2_semidirect_vn(2)));
    CHECK(v.answer == Answer::No);
    CHECK(v.reason == "not M-decomposed");
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->model == "sl2xv_2");
  }
  SUBCASE("so3 x d3: yes (amenable by compact)") {
    Verdict v = haagerup_verdict(decompose(so3_semidirect_d3()));
    CHECK(v.answer == Answer::Yes);
  }
  SUBCASE("rank 2 factors: no") {
    CHECK(haagerup_verdict(decompose(build_sl3())).answer == Answer::No);
    CHECK(haagerup_verdict(decompose(build_sp4())).answer == Answer::No);
    Verdict v = haagerup_verdict(decompose(build_sl3()));
    CHECK(v.reason.find("real rank 2") != std::string::npos);
  }
  SUBCASE("sp(2,1): no by the flag") {
    Verdict v = haagerup_verdict(decompose(build_sp21()));
    CHECK(v.answer == Answer::No);
    CHECK(v.reason.find("sp(n,1)") != std::string::npos);
  }
  SUBCASE("rank-one noncompact factors pass") {
    CHECK(haagerup_verdict(decompose(build_su21())).answer == Answer::Yes);
    CHECK(haagerup_verdict(decompose(build_so_pq(4, 1))).answer == Answer::Yes);
    CHECK(haagerup_verdict(decompose(build_sl2c_real())).answer == Answer::Yes);
  }
}

TEST_CASE("discrete criterion") {
  SUBCASE("so3 + abelian: yes") {
    TaggedAlgebra g = semidirect(build_so3().alg, LieAlgebra::abelian(2),
                                 {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)});
    Verdict v = discrete_haagerup_criterion(decompose(g));
    CHECK(v.answer == Answer::Yes);
  }
  SUBCASE("so3 x d3: no, nontrivial action") {
    Verdict v = discrete_haagerup_criterion(decompose(so3_semidirect_d3()));
    CHECK(v.answer == Answer::No);
  }
  SUBCASE("sl3: no, factor not allowed") {
    Verdict v = discrete_haagerup_criterion(decompose(build_sl3()));
    CHECK(v.answer == Answer::No);
    CHECK(v.reason.find("not locally isomorphic") != std::string::npos);
  }
  SUBCASE("discrete-yes implies haagerup-yes on assorted fixtures") {
    std::vector<TaggedAlgebra> fixtures;
    fixtures.push_back(build_sl2());
    fixtures.push_back(build_so3());
    fixtures.push_back(build_sl2c_real());
    fixtures.push_back(sl2_semidirect_vn(2));
    fixtures.push_back(so3_semidirect_d3());
    fixtures.push_back(build_sl3());
    for (const TaggedAlgebra& t : fixtures) {
      DecomposedAlgebra d = decompose(t);
      if (discrete_haagerup_criterion(d).answer == Answer::Yes)
        CHECK(haagerup_verdict(d).answer == Answer::Yes);
    }
  }
}

TEST_CASE("inner automorphisms") {
  TaggedAlgebra g = sl2_semidirect_vn(2);
  Vec x(5);
  x[1] = Scalar(1);  // X is ad-nilpotent in sl2 x v2
  x[3] = Scalar(2);
  Matrix phi = inner_automorphism(g.alg, x);
  // automorphism property on basis pairs
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Vec lhs = matvec(phi, g.alg.bracket_pair(i, j));
      Vec rhs = g.alg.bracket(phi.col(i), phi.col(j));
      CHECK(lhs == rhs);
    }
  SUBCASE("verdicts survive a conjugated Levi basis") {
    std::vector<Vec> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(matvec(phi, g.levi->basis.row(i)));
    DecomposedAlgebra d2 = verify_levi(g.alg, Subspace::from_vectors(rows, 5));
    Verdict v = haagerup_verdict(d2);
    CHECK(v.answer == Answer::No);
    CHECK(v.reason == "not M-decomposed");
    CHECK(d2.factors[0].entry->name == "sl2(R)");
  }
  SUBCASE("non-nilpotent direction is rejected") {
    Vec h(5);
    h[0] = Scalar(1);
    CHECK_THROWS_AS(inner_automorphism(g.alg, h), ExactError);
  }
}
