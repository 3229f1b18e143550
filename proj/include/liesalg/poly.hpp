#pragma once

#include <vector>

#include "liesalg/matrix.hpp"

namespace liesalg {

// Polynomial over Q, coefficients ascending; empty vector is the zero
// polynomial and all results are normalized (no trailing zeros).
using Poly = std::vector<Rational>;

Poly poly_normalize(Poly p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
// Euclidean division a = q*b + r, deg r < deg b.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_monic(const Poly& p);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd
std::string poly_to_string(const Poly& p);

// Minimal polynomial of a square rational matrix (monic), by incremental
// linear dependency among the vectorized powers.
Poly minimal_polynomial(const Matrix& m);

// All rational roots of p together with the root-free cofactor q:
// p = lc * prod (x - r_i)^{m_i} * q, q monic with no rational root.
struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
  Poly cofactor;                                // monic, no rational roots
};
RationalRoots rational_roots(const Poly& p);

// Number of distinct real roots of a squarefree p in the interval (a, b],
// by Sturm's theorem.
int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b);
std::vector<Poly> sturm_chain(const Poly& p);

// True iff x^2 + bx + c (monic quadratic over Q) is irreducible, i.e. the
// discriminant is not a rational square.
bool quadratic_irreducible(const Rational& b, const Rational& c);

bool is_rational_square(const Rational& r);

}  // namespace liesalg
