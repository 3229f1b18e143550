#include "liesalg/minimality.hpp"

#include <algorithm>

namespace liesalg {

namespace {

// Linear span of the action images [s, n].
Subspace action_image_span(const SAlgebra& a) {
  std::vector<Vec> rows;
  for (const Matrix& m : a.action)
    for (int j = 0; j < m.cols; ++j) {
      Vec c = m.col(j);
      if (!vec_is_zero(c)) rows.push_back(std::move(c));
    }
  return Subspace::from_vectors(rows, a.n.dim);
}

Subspace action_image_of(const SAlgebra& a, const Subspace& sub) {
  std::vector<Vec> rows;
  for (const Matrix& m : a.action)
    for (int i = 0; i < sub.dim(); ++i) {
      Vec c = matvec(m, sub.basis.row(i));
      if (!vec_is_zero(c)) rows.push_back(std::move(c));
    }
  return Subspace::from_vectors(rows, a.n.dim);
}

// Module of s on n/Dn (the action always descends).
Representation quotient_action(const SAlgebra& a, const Subspace& dn) {
  return quotient_module(a.action_rep(), dn);
}

struct So3Profile {
  std::vector<std::pair<int, int>> summands;  // complexified (n, mult)
  Cond4 irreducible = Cond4::Undecidable;
};

So3Profile so3_irreducibility(const Representation& rho) {
  So3Profile out;
  Sl2Report rpt = sl2_analysis(so3_module_as_sl2(extend_scalars(rho)));
  out.summands = rpt.summands;
  if (rpt.summands.size() == 1 && rpt.summands[0].second == 1) {
    out.irreducible = Cond4::True;  // absolutely irreducible d-type
  } else if (rpt.summands.size() == 1 && rpt.summands[0].second == 2) {
    // two conjugate copies: quaternionic u-type iff the complex summand has
    // even dimension (odd-dimensional summands descend to d + d)
    out.irreducible = (rpt.summands[0].first % 2 == 0) ? Cond4::True : Cond4::False;
  } else {
    out.irreducible = Cond4::False;
  }
  return out;
}

}  // namespace

Subspace s_bracket_ideal(const SAlgebra& a) {
  Subspace span = action_image_span(a);
  std::vector<Vec> gens;
  for (int i = 0; i < span.dim(); ++i) gens.push_back(span.basis.row(i));
  Subspace closed = subalgebra_generated(a.n, gens);
  if (!is_ideal(a.n, closed)) throw ExactError("s_bracket_ideal: closure is not an ideal of n");
  // applying the action again reproduces the same subalgebra
  Subspace again = action_image_of(a, closed);
  std::vector<Vec> gens2;
  for (int i = 0; i < again.dim(); ++i) gens2.push_back(again.basis.row(i));
  if (!(subalgebra_generated(a.n, gens2) == closed))
    throw ExactError("s_bracket_ideal: [s,[s,n]] != [s,n]");
  return closed;
}

MinimalityReport check_conditions(const SAlgebra& a) {
  MinimalityReport rep;
  Subspace dn = derived_subspace(a.n);
  Subspace whole = Subspace::full(a.n.dim);
  rep.c1 = bracket_span(a.n, whole, dn).dim() == 0;
  Subspace sbi = s_bracket_ideal(a);
  rep.c2 = sbi.dim() == a.n.dim;
  rep.c3 = action_image_of(a, dn).dim() == 0;

  Representation quot = quotient_action(a, dn);
  rep.c4_full = fixed_vectors(quot).dim() == 0;
  if (is_sl2_standard(a.s)) {
    Sl2Report an = sl2_analysis(quot);
    rep.summand_profile = an.summands;
    rep.c4 = an.irreducible ? Cond4::True : Cond4::False;
    if (!an.irreducible) rep.note = "n/Dn splits into " + std::to_string(an.summands.size()) +
                                    " isotypic summand(s) with multiplicities";
  } else if (is_so3_standard(a.s)) {
    So3Profile prof = so3_irreducibility(quot);
    rep.summand_profile = prof.summands;
    rep.c4 = prof.irreducible;
    if (rep.c4 == Cond4::False) rep.note = "n/Dn is reducible as a real so3 module";
  } else {
    rep.c4 = Cond4::Undecidable;
    rep.note = "irreducibility is decided for s = sl2 or so3 only";
  }

  if (rep.c1 && rep.c2 && rep.c3)
    rep.verdict =
        (rep.c4 == Cond4::True) ? MinimalityVerdict::Minimal : MinimalityVerdict::AlmostMinimal;
  else
    rep.verdict = MinimalityVerdict::Neither;
  return rep;
}

CanonicalPresentation canonical_presentation(const SAlgebra& a) {
  MinimalityReport rep = check_conditions(a);
  if (!(rep.c1 && rep.c2 && rep.c3))
    throw ExactError("canonical_presentation: input is not almost minimal");
  Subspace dn = derived_subspace(a.n);
  Subspace v = action_image_span(a);
  if (v.dim() + dn.dim() != a.n.dim || subspace_intersect(v, dn).dim() != 0)
    throw ExactError("canonical_presentation: [s,n] is not a complement of Dn");
  Representation vmod = restrict_module(a.action_rep(), v);
  std::vector<Matrix> alt = invariant_forms(vmod, FormClass::Alternating).basis;
  const int d = static_cast<int>(alt.size());
  const int m = vmod.dim;
  const int r = dn.dim();

  // Solve the evaluation map M : Alt* -> Dn, M e_{x,y} = [x,y].
  Matrix M(r, d);
  if (d > 0) {
    int pairs = m * (m - 1) / 2;
    Matrix E(pairs, d), T(pairs, r);
    int row = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j, ++row) {
        for (int k = 0; k < d; ++k) E.at(row, k) = alt[k].at(i, j);
        Vec br = a.n.bracket(v.basis.row(i), v.basis.row(j));
        auto coords = dn.coordinates(br);
        if (!coords) throw ExactError("canonical_presentation: bracket escapes Dn");
        for (int k = 0; k < r; ++k) T.at(row, k) = (*coords)[k];
      }
    if (rank_of(E) != d)
      throw ExactError("canonical_presentation: evaluation functionals do not span Alt*");
    for (int c = 0; c < r; ++c) {
      auto x = solve(E, T.col(c));
      if (!x) throw ExactError("canonical_presentation: evaluation map is inconsistent");
      for (int k = 0; k < d; ++k) M.at(c, k) = (*x)[k];
    }
  } else if (r != 0) {
    throw ExactError("canonical_presentation: Dn nonzero but Alt* = 0");
  }

  CanonicalPresentation out;
  out.presentation.module = vmod;
  out.presentation.alt_basis = alt;
  out.presentation.Z = Subspace::from_rows(kernel_basis(M));
  out.module_embedding = v.basis;

  // Round trip: the realized h(v)/Z must map isomorphically onto n.
  SAlgebra realized = presented_salgebra(out.presentation);
  if (realized.n.dim != a.n.dim)
    throw ExactError("canonical_presentation: presented dimension mismatch");
  // center coordinates of the realized algebra are the free columns of Z
  std::vector<int> pivots;
  for (int i = 0; i < out.presentation.Z.dim(); ++i)
    for (int j = 0; j < d; ++j)
      if (!out.presentation.Z.basis.at(i, j).is_zero()) {
        pivots.push_back(j);
        break;
      }
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int j = 0; j < d; ++j) {
      if (p < pivots.size() && pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  Matrix iso(a.n.dim, realized.n.dim);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < a.n.dim; ++i) iso.at(i, j) = v.basis.at(j, i);
  for (size_t c = 0; c < free_cols.size(); ++c) {
    Vec dn_coords = M.col(free_cols[c]);
    Vec img(a.n.dim);
    for (int k = 0; k < r; ++k)
      img = vec_add(img, vec_scaled(dn.basis.row(k), dn_coords[k]));
    for (int i = 0; i < a.n.dim; ++i) iso.at(i, m + static_cast<int>(c)) = img[i];
  }
  if (rank_of(iso) != a.n.dim) throw ExactError("canonical_presentation: morphism is not bijective");
  for (int i = 0; i < realized.n.dim; ++i)
    for (int j = i + 1; j < realized.n.dim; ++j) {
      Vec lhs = matvec(iso, realized.n.bracket_pair(i, j));
      Vec rhs = a.n.bracket(iso.col(i), iso.col(j));
      if (lhs != rhs) throw ExactError("canonical_presentation: morphism fails bracket check");
    }
  for (int k = 0; k < a.s.dim; ++k)
    if (!(a.action[k] * iso == iso * realized.action[k]))
      throw ExactError("canonical_presentation: morphism is not equivariant");
  out.iso = iso;
  return out;
}

namespace {

// Fourier-Motzkin feasibility for sum_i a_i y_i >= c systems; returns a
// witness y when feasible.
struct Ineq {
  std::vector<Rational> a;
  Rational c;
};

std::optional<std::vector<Rational>> fm_solve(std::vector<Ineq> sys, int vars) {
  std::vector<std::vector<Ineq>> levels;
  for (int v = vars - 1; v >= 0; --v) {
    levels.push_back(sys);
    std::vector<Ineq> next;
    std::vector<Ineq> lows, ups;
    for (const Ineq& q : sys) {
      if (q.a[v] > 0)
        lows.push_back(q);
      else if (q.a[v] < 0)
        ups.push_back(q);
      else
        next.push_back(q);
    }
    for (const Ineq& lo : lows)
      for (const Ineq& up : ups) {
        // y_v >= (c_lo - rest_lo)/a_lo and y_v <= (c_up - rest_up)/a_up (a_up < 0)
        Ineq combined;
        combined.a.assign(vars, Rational(0));
        Rational s = -up.a[v];  // positive
        for (int i = 0; i < vars; ++i) combined.a[i] = lo.a[i] * s + up.a[i] * lo.a[v];
        combined.a[v] = 0;
        combined.c = lo.c * s + up.c * lo.a[v];
        next.push_back(std::move(combined));
      }
    sys = std::move(next);
  }
  for (const Ineq& q : sys)
    if (q.c > 0) return std::nullopt;  // 0 >= c fails
  std::vector<Rational> y(vars, Rational(0));
  for (int v = 0; v < vars; ++v) {
    const std::vector<Ineq>& level = levels[vars - 1 - v];
    bool has_low = false, has_up = false;
    Rational low(0), up(0);
    for (const Ineq& q : level) {
      if (q.a[v] == 0) continue;
      Rational rest = q.c;
      for (int i = 0; i < vars; ++i)
        if (i != v) rest -= q.a[i] * y[i];
      Rational bound = rest / q.a[v];
      if (q.a[v] > 0) {
        if (!has_low || bound > low) low = bound;
        has_low = true;
      } else {
        if (!has_up || bound < up) up = bound;
        has_up = true;
      }
    }
    if (has_low)
      y[v] = low;
    else if (has_up)
      y[v] = up;
  }
  return y;
}

// Submodule generated by one summand's primitive vector under rho(Y).
Subspace sl2_summand_space(const Representation& rho, int n) {
  const Matrix& h = rho.actions[0];
  const Matrix& x = rho.actions[1];
  const Matrix& y = rho.actions[2];
  Matrix shifted = h;
  for (int i = 0; i < h.rows; ++i) shifted.at(i, i) -= Scalar(n - 1);
  Subspace prim = subspace_intersect(Subspace::from_rows(kernel_basis(x)),
                                     Subspace::from_rows(kernel_basis(shifted)));
  if (prim.dim() != 1) throw ExactError("summand is not multiplicity-free");
  std::vector<Vec> rows;
  Vec cur = prim.basis.row(0);
  for (int i = 0; i < n; ++i) {
    rows.push_back(cur);
    cur = matvec(y, cur);
  }
  return Subspace::from_vectors(rows, rho.dim);
}

}  // namespace

bool orbit_certificate_valid(const HModulePresentation& p, const HModulePresentation& q,
                             const Vec& scaling) {
  if (static_cast<int>(scaling.size()) != p.alt_dim()) return false;
  for (const Scalar& s : scaling)
    if (!s.is_rational() || sgn(s.re) <= 0) return false;
  Matrix mapped = p.Z.basis;
  for (int i = 0; i < mapped.rows; ++i)
    for (int j = 0; j < mapped.cols; ++j) mapped.at(i, j) *= scaling[j];
  return Subspace::from_rows(mapped) == q.Z;
}

OrbitResult quotient_iso_test(const HModulePresentation& p, const HModulePresentation& q) {
  OrbitResult res;
  if (!(p.module.actions == q.module.actions) || p.alt_dim() != q.alt_dim())
    throw ExactError("quotient_iso_test: presentations have different base modules");
  const int d = p.alt_dim();
  if (p.Z == q.Z) {
    res.answer = OrbitAnswer::Isomorphic;
    res.scaling = Vec(d, Scalar(1));
    res.note = "identity";
    return res;
  }
  if (p.Z.dim() != q.Z.dim()) {
    res.answer = OrbitAnswer::NotIsomorphic;
    res.note = "different center dimensions";
    return res;
  }
  if (!is_sl2_standard(p.module.algebra)) {
    res.answer = OrbitAnswer::Undecided;
    res.note = "orbit testing is implemented for diagonal scalar automorphism groups (sl2, "
               "multiplicity-free); the quaternionic so3 case is not decided";
    return res;
  }
  Sl2Report rpt = sl2_analysis(p.module);
  for (auto& [n, mult] : rpt.summands)
    if (mult > 1) {
      res.answer = OrbitAnswer::Undecided;
      res.note = "module is not multiplicity-free";
      return res;
    }
  // each Alt* coordinate must live on a single summand
  std::vector<Subspace> spaces;
  for (auto& [n, mult] : rpt.summands) spaces.push_back(sl2_summand_space(p.module, n));
  std::vector<int> support(d, -1);
  for (int k = 0; k < d; ++k) {
    Subspace rows = Subspace::from_rows(p.alt_basis[k]);
    for (size_t si = 0; si < spaces.size(); ++si)
      if (spaces[si].contains(rows)) {
        support[k] = static_cast<int>(si);
        break;
      }
    if (support[k] < 0) {
      res.answer = OrbitAnswer::Undecided;
      res.note = "an invariant form is not supported on a single summand";
      return res;
    }
  }
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l)
      if (support[k] == support[l]) {
        res.answer = OrbitAnswer::Undecided;
        res.note = "two invariant forms share a summand";
        return res;
      }

  // Aut acts on the Alt* coordinates by independent positive scalars; the
  // orbit condition is a linear system on the scaling plus positivity.
  Matrix ann = kernel_basis(q.Z.basis);  // functionals vanishing on Z'
  std::vector<Vec> constraint_rows;
  for (int zr = 0; zr < p.Z.dim(); ++zr)
    for (int wr = 0; wr < ann.rows; ++wr) {
      Vec row(d);
      bool nonzero = false;
      for (int k = 0; k < d; ++k) {
        row[k] = p.Z.basis.at(zr, k) * ann.at(wr, k);
        if (!row[k].is_zero()) nonzero = true;
      }
      if (nonzero) constraint_rows.push_back(std::move(row));
    }
  Matrix sol = constraint_rows.empty() ? Matrix::identity(d)
                                       : kernel_basis(Matrix::from_rows(constraint_rows));
  if (sol.rows > 0) {
    std::vector<Ineq> sys;
    for (int k = 0; k < d; ++k) {
      Ineq q1;
      q1.c = Rational(1);
      q1.a.resize(sol.rows);
      for (int i = 0; i < sol.rows; ++i) q1.a[i] = sol.at(i, k).re;
      sys.push_back(std::move(q1));
    }
    auto y = fm_solve(std::move(sys), sol.rows);
    if (y) {
      Vec mu(d);
      for (int k = 0; k < d; ++k) {
        Rational acc(0);
        for (int i = 0; i < sol.rows; ++i) acc += (*y)[i] * sol.at(i, k).re;
        mu[k] = Scalar(acc);
      }
      if (orbit_certificate_valid(p, q, mu)) {
        res.answer = OrbitAnswer::Isomorphic;
        res.scaling = mu;
        res.note = "diagonal scaling certificate";
        return res;
      }
    }
  }
  res.answer = OrbitAnswer::NotIsomorphic;
  res.note = "no positive diagonal scaling of the Alt* coordinates maps Z onto Z'";
  return res;
}

MinimalExtraction extract_minimal_subalgebra(const SAlgebra& a) {
  Subspace images = action_image_span(a);
  if (images.dim() == 0) throw ExactError("extract_minimal_subalgebra: the action is zero");
  Subspace dn = derived_subspace(a.n);
  if (action_image_of(a, dn).dim() != 0) {
    // recurse into the derived subalgebra, where the action is still nonzero
    RestrictedAlgebra sub = restrict_to_subalgebra(a.n, dn);
    SAlgebra inner;
    inner.s = a.s;
    inner.n = sub.alg;
    Representation restr = restrict_module(a.action_rep(), dn);
    inner.action = restr.actions;
    MinimalExtraction deep = extract_minimal_subalgebra(inner);
    deep.embedding = deep.embedding * dn.basis;
    return deep;
  }

  std::vector<Vec> adapted;  // module basis rows, then center rows (n coords)
  int k = 0;
  if (is_sl2_standard(a.s)) {
    Representation vmod = restrict_module(a.action_rep(), images);
    Sl2Report rpt = sl2_analysis(vmod);
    k = rpt.summands.front().first;  // smallest summand dimension
    Matrix shifted = vmod.actions[0];
    for (int i = 0; i < shifted.rows; ++i) shifted.at(i, i) -= Scalar(k - 1);
    Subspace prim = subspace_intersect(Subspace::from_rows(kernel_basis(vmod.actions[1])),
                                       Subspace::from_rows(kernel_basis(shifted)));
    Vec e = matvec(images.basis.transpose(), prim.basis.row(0));  // to n coords
    const Matrix act_y = a.action[2];
    for (int i = 0; i < k; ++i) {
      adapted.push_back(e);
      if (i + 1 < k) e = vec_scaled(matvec(act_y, e), Scalar(make_rational(1, i + 1)));
    }
  } else if (is_so3_standard(a.s)) {
    Representation vmod = restrict_module(a.action_rep(), images);
    Representation cplx = so3_module_as_sl2(extend_scalars(vmod));
    Sl2Report rpt = sl2_analysis(cplx);
    // candidate real dims: nc for odd complex summands, 2nc for even
    int best = -1, best_real = 0;
    for (auto& [nc, mult] : rpt.summands) {
      int real_dim = (nc % 2 == 1) ? nc : 2 * nc;
      if (best < 0 || real_dim < best_real) {
        best = nc;
        best_real = real_dim;
      }
    }
    Matrix shifted = cplx.actions[0];
    for (int i = 0; i < shifted.rows; ++i) shifted.at(i, i) -= Scalar(best - 1);
    Subspace prim = subspace_intersect(Subspace::from_rows(kernel_basis(cplx.actions[1])),
                                       Subspace::from_rows(kernel_basis(shifted)));
    std::vector<Vec> orbit;
    Vec cur = prim.basis.row(0);
    for (int i = 0; i < best; ++i) {
      orbit.push_back(cur);
      cur = matvec(cplx.actions[2], cur);
    }
    Subspace w = Subspace::from_vectors(orbit, vmod.dim);
    std::vector<Vec> with_conj;
    for (int i = 0; i < w.dim(); ++i) {
      Vec row = w.basis.row(i);
      with_conj.push_back(row);
      for (auto& s : row) s = s.conj();
      with_conj.push_back(row);
    }
    Subspace u = Subspace::from_vectors(with_conj, vmod.dim);
    std::vector<Vec> real_rows;
    for (int i = 0; i < u.dim(); ++i) {
      Vec row = u.basis.row(i);
      Vec re(row.size()), im(row.size());
      for (size_t c = 0; c < row.size(); ++c) {
        re[c] = Scalar(row[c].re);
        im[c] = Scalar(row[c].im);
      }
      real_rows.push_back(re);
      real_rows.push_back(im);
    }
    Subspace wreal = Subspace::from_vectors(real_rows, vmod.dim);
    if (wreal.dim() != best_real)
      throw ExactError("extract_minimal_subalgebra: real summand has unexpected dimension");
    k = best_real;
    for (int i = 0; i < wreal.dim(); ++i)
      adapted.push_back(matvec(images.basis.transpose(), wreal.basis.row(i)));
  } else {
    throw ExactError("extract_minimal_subalgebra: s must be the standard sl2 or so3");
  }

  // center part: span of brackets [w, w]
  std::vector<Vec> zrows;
  for (size_t i = 0; i < adapted.size(); ++i)
    for (size_t j = i + 1; j < adapted.size(); ++j) {
      Vec b = a.n.bracket(adapted[i], adapted[j]);
      if (!vec_is_zero(b)) zrows.push_back(std::move(b));
    }
  Subspace z = Subspace::from_vectors(zrows, a.n.dim);
  std::vector<Vec> full = adapted;
  Matrix z_basis = z.basis;
  if (is_sl2_standard(a.s) && z.dim() == 1) {
    // normalize the central generator against the canonical alternating form
    // of v_k, so the bracket table matches h(v_k) exactly
    FormSpace alt = invariant_forms(build_vn(k).rep, FormClass::Alternating);
    if (alt.basis.size() != 1)
      throw ExactError("extract_minimal_subalgebra: unexpected Alt dimension");
    int i0 = -1, j0 = -1;
    for (int i = 0; i < k && i0 < 0; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!alt.basis[0].at(i, j).is_zero()) {
          i0 = i;
          j0 = j;
          break;
        }
    Vec zgen = a.n.bracket(adapted[i0], adapted[j0]);
    if (vec_is_zero(zgen)) throw ExactError("extract_minimal_subalgebra: degenerate pairing");
    z_basis = Matrix::from_rows({vec_scaled(zgen, scalar_inverse(alt.basis[0].at(i0, j0)))});
  } else if (z.dim() > 1 && is_sl2_standard(a.s)) {
    throw ExactError("extract_minimal_subalgebra: center dim > 1 over sl2");
  }
  for (int i = 0; i < z_basis.rows; ++i) full.push_back(z_basis.row(i));

  MinimalExtraction out;
  out.embedding = Matrix::from_rows(full);
  if (rank_of(out.embedding) != static_cast<int>(full.size()))
    throw ExactError("extract_minimal_subalgebra: adapted basis is dependent");

  // assemble the minimal s-algebra in the adapted coordinates
  const int nd = static_cast<int>(full.size());
  Subspace span = Subspace::from_rows(out.embedding);
  auto coords_in_adapted = [&](const Vec& v) {
    auto c = solve(out.embedding.transpose(), v);
    if (!c) throw ExactError("extract_minimal_subalgebra: subspace is not closed");
    return *c;
  };
  SAlgebra minimal;
  minimal.s = a.s;
  minimal.n.field = a.n.field;
  minimal.n.dim = nd;
  minimal.n.table.assign(static_cast<size_t>(nd) * (nd - 1) / 2, Vec(nd));
  minimal.n.default_names();
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j)
      minimal.n.set_bracket(i, j, coords_in_adapted(a.n.bracket(full[i], full[j])));
  for (const Matrix& act : a.action) {
    Matrix m(nd, nd);
    for (int j = 0; j < nd; ++j) {
      Vec img = matvec(act, full[j]);
      Vec c = coords_in_adapted(img);
      for (int i = 0; i < nd; ++i) m.at(i, j) = c[i];
    }
    minimal.action.push_back(std::move(m));
  }
  out.minimal = minimal;

  if (is_sl2_standard(a.s)) {
    // the adapted module basis must realize the v_k tables exactly
    VnModule vk = build_vn(k);
    for (int gi = 0; gi < 3; ++gi)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (minimal.action[gi].at(i, j) != vk.rep.actions[gi].at(i, j))
            throw ExactError("extract_minimal_subalgebra: adapted action is not the v_k model");
    if (z_basis.rows == 1) {
      Matrix psi = invariant_forms(vk.rep, FormClass::Alternating).basis.at(0);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          Vec expect(nd);
          expect[k] = psi.at(i, j);
          if (minimal.n.bracket_pair(i, j) != expect)
            throw ExactError("extract_minimal_subalgebra: bracket is not the invariant pairing");
        }
    }
  }
  MinimalityReport verdict = check_conditions(out.minimal);
  if (verdict.verdict != MinimalityVerdict::Minimal)
    throw ExactError("extract_minimal_subalgebra: result failed the minimality check");
  return out;
}

}  // namespace liesalg
