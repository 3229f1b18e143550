#include "liesalg/decider.hpp"

#include <algorithm>

namespace liesalg {

const std::vector<CatalogEntry>& factor_catalog() {
  static const std::vector<CatalogEntry> table = {
      {"sl2(R)", 3, 2, 1, 1, 1, false, true},
      {"so3", 3, 0, 3, 1, 0, false, true},
      {"sl2(C)", 6, 3, 3, 2, 1, false, true},
      {"sl3(R)", 8, 5, 3, 1, 2, false, false},
      {"su(3)", 8, 0, 8, 1, 0, false, false},
      {"su(2,1)", 8, 4, 4, 1, 1, false, false},
      {"sp4(R)", 10, 6, 4, 1, 2, false, false},
      {"so(4,1)", 10, 4, 6, 1, 1, false, false},
      {"so(5)", 10, 0, 10, 1, 0, false, false},
      {"sp(2,1)", 21, 8, 13, 1, 1, true, false},
      {"f4(-20)", 52, 16, 36, 1, 1, true, false},
  };
  return table;
}

namespace {

std::optional<CatalogEntry> catalog_lookup(int dim, const Inertia& sig, int centroid) {
  for (const CatalogEntry& e : factor_catalog())
    if (e.dim == dim && e.sig_pos == sig.pos && e.sig_neg == sig.neg && e.centroid_dim == centroid)
      return e;
  return std::nullopt;
}

Vec unit(int dim, int k) {
  Vec v(dim);
  v[k] = Scalar(1);
  return v;
}

}  // namespace

DecomposedAlgebra verify_levi(const LieAlgebra& g, const Subspace& levi_span) {
  DecomposedAlgebra d;
  d.g = g;
  d.radical = radical_subspace(g);
  d.levi = levi_span;
  if (levi_span.ambient != g.dim) throw NotALeviComplement("levi basis has wrong ambient dimension");
  if (!is_subalgebra(g, levi_span))
    throw NotALeviComplement("levi basis is not closed under the bracket");
  if (levi_span.dim() + d.radical.dim() != g.dim)
    throw NotALeviComplement("levi dimension does not complement the radical");
  if (subspace_intersect(levi_span, d.radical).dim() != 0)
    throw NotALeviComplement("levi basis meets the radical");
  if (levi_span.dim() == 0) return d;  // solvable algebra, empty Levi factor
  RestrictedAlgebra s = restrict_to_subalgebra(g, levi_span);
  if (radical_subspace(s.alg).dim() != 0)
    throw NotALeviComplement("levi subalgebra is not semisimple (degenerate Killing form)");
  for (const SimpleIdeal& ideal : simple_ideal_decomposition(s.alg)) {
    SimpleFactor f;
    f.space = Subspace::from_rows(ideal.space.basis * levi_span.basis);
    f.centroid_dim = ideal.centroid_dim;
    RestrictedAlgebra fact = restrict_to_subalgebra(s.alg, ideal.space);
    f.killing_sig = signature(killing_matrix(fact.alg));
    f.compact = (f.killing_sig.pos == 0 && f.killing_sig.zero == 0) ? Compactness::Compact
                                                                    : Compactness::Noncompact;
    f.entry = catalog_lookup(fact.alg.dim, f.killing_sig, f.centroid_dim);
    d.factors.push_back(std::move(f));
  }
  return d;
}

MDecomposition is_m_decomposed(const DecomposedAlgebra& d) {
  MDecomposition res;
  for (const SimpleFactor& f : d.factors) {
    if (f.compact == Compactness::Compact) continue;
    for (int i = 0; i < f.space.dim(); ++i)
      for (int j = 0; j < d.radical.dim(); ++j) {
        Vec br = d.g.bracket(f.space.basis.row(i), d.radical.basis.row(j));
        if (!vec_is_zero(br)) {
          res.m_decomposed = false;
          res.witness = std::make_pair(f.space.basis.row(i), d.radical.basis.row(j));
          return res;
        }
      }
  }
  return res;
}

std::optional<CatalogEntry> recognize_factor(const DecomposedAlgebra& d, size_t factor_index) {
  return d.factors.at(factor_index).entry;
}

namespace {

// Enumerate rational sl2 triples inside a 3-dimensional factor: candidates
// for H are basis vectors, then small integer combinations.
struct Sl2Triple {
  Vec h, x, y;  // in factor coordinates
};

std::optional<Sl2Triple> find_triple(const LieAlgebra& f, int bound) {
  std::vector<Vec> candidates;
  for (int i = 0; i < f.dim; ++i) candidates.push_back(unit(f.dim, i));
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Vec v(f.dim);
        v[0] = Scalar(a);
        v[1] = Scalar(b);
        v[2] = Scalar(c);
        candidates.push_back(std::move(v));
      }
  const Poly want = {Rational(0), Rational(-4), Rational(0), Rational(1)};  // x^3 - 4x
  for (const Vec& h : candidates) {
    Matrix ad = f.ad(h);
    if (minimal_polynomial(ad) != want) continue;
    Matrix shifted = ad;
    for (int i = 0; i < 3; ++i) shifted.at(i, i) -= Scalar(2);
    Matrix kx = kernel_basis(shifted);
    if (kx.rows != 1) continue;
    Matrix shifted2 = ad;
    for (int i = 0; i < 3; ++i) shifted2.at(i, i) += Scalar(2);
    Matrix ky = kernel_basis(shifted2);
    if (ky.rows != 1) continue;
    Vec x0 = kx.row(0), y0 = ky.row(0);
    Vec br = f.bracket(x0, y0);
    // [x0, y0] must be a nonzero multiple of h
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
      if (!h[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0 || br[pivot].is_zero()) continue;
    Scalar c = br[pivot] / h[pivot];
    if (!(br == vec_scaled(h, c))) continue;
    Sl2Triple t;
    t.h = h;
    t.x = vec_scaled(x0, scalar_inverse(c));
    t.y = y0;
    // exact triple relations
    if (!(f.bracket(t.h, t.x) == vec_scaled(t.x, Scalar(2)))) continue;
    if (!(f.bracket(t.h, t.y) == vec_scaled(t.y, Scalar(-2)))) continue;
    if (!(f.bracket(t.x, t.y) == t.h)) continue;
    return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessEmbedding> find_witness(const DecomposedAlgebra& d, int triple_bound) {
  for (const SimpleFactor& f : d.factors) {
    if (f.compact == Compactness::Compact) continue;
    if (!f.entry || f.entry->name != "sl2(R)") continue;
    // the factor must act nontrivially on the radical
    bool acts = false;
    for (int i = 0; i < f.space.dim() && !acts; ++i)
      for (int j = 0; j < d.radical.dim() && !acts; ++j)
        if (!vec_is_zero(d.g.bracket(f.space.basis.row(i), d.radical.basis.row(j)))) acts = true;
    if (!acts) continue;
    RestrictedAlgebra fact = restrict_to_subalgebra(d.g, f.space);
    auto triple = find_triple(fact.alg, triple_bound);
    if (!triple) continue;
    auto to_g = [&](const Vec& v) { return matvec(f.space.basis.transpose(), v); };
    Vec hg = to_g(triple->h), xg = to_g(triple->x), yg = to_g(triple->y);

    // s-algebra structure on the radical under the triple
    SAlgebra sa;
    sa.s = build_sl2().alg;
    RestrictedAlgebra rad_sub = restrict_to_subalgebra(d.g, d.radical);
    sa.n = rad_sub.alg;
    for (const Vec* sv : {&hg, &xg, &yg}) {
      Matrix act(sa.n.dim, sa.n.dim);
      for (int j = 0; j < sa.n.dim; ++j) {
        Vec img = d.g.bracket(*sv, d.radical.basis.row(j));
        auto coords = d.radical.coordinates(img);
        if (!coords) throw ExactError("find_witness: radical is not an ideal");
        for (int i = 0; i < sa.n.dim; ++i) act.at(i, j) = (*coords)[i];
      }
      sa.action.push_back(std::move(act));
    }
    MinimalExtraction ext;
    try {
      ext = extract_minimal_subalgebra(sa);
    } catch (const ExactError&) {
      continue;
    }
    const int k = ext.minimal.n.dim - (derived_subspace(ext.minimal.n).dim());
    const int zdim = ext.minimal.n.dim - k;
    WitnessEmbedding w;
    w.module_dim = k;
    SAlgebra model;
    if (zdim == 0) {
      VnModule vk = build_vn(k);
      model.s = vk.rep.algebra;
      model.n = LieAlgebra::abelian(k);
      model.action = vk.rep.actions;
      w.model = "sl2xv_" + std::to_string(k);
    } else if (zdim == 1) {
      model = build_heisenberg(k + 1);
      w.model = "sl2xh_" + std::to_string(k + 1);
    } else {
      continue;  // not an sl2-type witness shape
    }
    if (!(model.n.table == ext.minimal.n.table))
      throw ExactError("find_witness: extraction does not match the model table");
    w.model_algebra = semidirect(model).alg;
    std::vector<Vec> rows = {hg, xg, yg};
    for (int i = 0; i < ext.minimal.n.dim; ++i)
      rows.push_back(matvec(d.radical.basis.transpose(), ext.embedding.row(i)));
    w.basis = Matrix::from_rows(rows);
    if (!verify_witness(d, w)) throw ExactError("find_witness: certificate failed verification");
    return w;
  }
  return std::nullopt;
}

bool verify_witness(const DecomposedAlgebra& d, const WitnessEmbedding& w) {
  const LieAlgebra& model = w.model_algebra;
  if (w.basis.rows != model.dim || w.basis.cols != d.g.dim) return false;
  if (rank_of(w.basis) != model.dim) return false;  // injective
  // brackets realize the model structure constants
  for (int i = 0; i < model.dim; ++i)
    for (int j = i + 1; j < model.dim; ++j) {
      Vec br = d.g.bracket(w.basis.row(i), w.basis.row(j));
      Vec expect(d.g.dim);
      const Vec& c = model.bracket_pair(i, j);
      for (int k = 0; k < model.dim; ++k)
        if (!c[k].is_zero()) expect = vec_add(expect, vec_scaled(w.basis.row(k), c[k]));
      if (br != expect) return false;
    }
  // the witness radical (module + center rows) sits inside rad(g)
  for (int i = 3; i < model.dim; ++i)
    if (!d.radical.contains(w.basis.row(i))) return false;
  return true;
}

Verdict haagerup_verdict(const DecomposedAlgebra& d, int triple_bound) {
  Verdict v;
  v.question = "haagerup";
  MDecomposition md = is_m_decomposed(d);
  bool unknown_factor = false;
  if (!md.m_decomposed) v.violations.push_back("not M-decomposed");
  for (const SimpleFactor& f : d.factors) {
    if (!f.entry) {
      unknown_factor = true;
      continue;
    }
    if (f.entry->real_rank >= 2)
      v.violations.push_back("simple factor " + f.entry->name + " has real rank " +
                             std::to_string(f.entry->real_rank));
    if (f.entry->is_sp_n1_or_f4)
      v.violations.push_back("simple factor " + f.entry->name + " is sp(n,1) or f4(-20)");
  }
  if (!v.violations.empty()) {
    v.answer = Answer::No;
    v.reason = v.violations.front();
    if (!md.m_decomposed) v.witness = find_witness(d, triple_bound);
    return v;
  }
  if (unknown_factor) {
    v.answer = Answer::Undecided;
    v.reason = "a simple factor is not in the recognition catalog";
    return v;
  }
  v.answer = Answer::Yes;
  v.reason = "M-decomposed with all simple factors of real rank <= 1 and no sp(n,1)/f4(-20) factor";
  return v;
}

Verdict discrete_haagerup_criterion(const DecomposedAlgebra& d) {
  Verdict v;
  v.question = "discrete-haagerup-criterion";
  bool unknown_factor = false;
  if (bracket_span(d.g, d.levi, d.radical).dim() != 0)
    v.violations.push_back("the semisimple part acts nontrivially on the radical");
  for (const SimpleFactor& f : d.factors) {
    if (!f.entry) {
      unknown_factor = true;
      continue;
    }
    if (!f.entry->geometric_rank_one)
      v.violations.push_back("simple factor " + f.entry->name +
                             " is not locally isomorphic to SO3(R), SL2(R) or SL2(C)");
  }
  if (!v.violations.empty()) {
    v.answer = Answer::No;
    v.reason = v.violations.front();
    return v;
  }
  if (unknown_factor) {
    v.answer = Answer::Undecided;
    v.reason = "a simple factor is not in the recognition catalog";
    return v;
  }
  v.answer = Answer::Yes;
  v.reason = "direct product of a solvable radical with SO3(R)/SL2(R)/SL2(C) factors";
  return v;
}

Matrix inner_automorphism(const LieAlgebra& g, const Vec& x) {
  Matrix ad = g.ad(x);
  // exp(ad x) for nilpotent ad x
  Matrix result = Matrix::identity(g.dim);
  Matrix power = Matrix::identity(g.dim);
  Rational fact(1);
  for (int k = 1; k <= g.dim + 1; ++k) {
    power = power * ad;
    if (power.is_zero()) break;
    if (k == g.dim + 1) throw ExactError("inner_automorphism: ad x is not nilpotent");
    fact *= Rational(k);
    result = result + power.scaled(Scalar(1 / fact));
  }
  return result;
}

}  // namespace liesalg
