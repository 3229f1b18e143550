#include "liesalg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace liesalg {

Poly poly_normalize(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return poly_normalize(std::move(d));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_normalize(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_normalize(std::move(r));
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw ExactError("polynomial division by zero");
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (poly_degree(r) >= poly_degree(b)) {
    int shift = poly_degree(r) - poly_degree(b);
    Rational f = r.back() / b.back();
    q[shift] += f;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    r = poly_normalize(std::move(r));
    if (r.empty()) break;
  }
  q = poly_normalize(std::move(q));
}

Poly poly_monic(const Poly& p) {
  if (p.empty()) return p;
  Poly r = p;
  Rational lc = r.back();
  for (auto& c : r) c /= lc;
  return r;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = poly_normalize(a), y = poly_normalize(b);
  while (!y.empty()) {
    Poly q, r;
    poly_divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly_degree(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    os << rational_to_string(p[i]);
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

Poly minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw ExactError("minimal polynomial of non-square matrix");
  if (!m.all_rational()) throw ExactError("minimal polynomial requires a rational matrix");
  int n = m.rows;
  size_t len = static_cast<size_t>(n) * n;
  auto to_rat = [len](const Matrix& x) {
    std::vector<Rational> v(len);
    for (size_t i = 0; i < len; ++i) v[i] = x.a[i].re;
    return v;
  };
  struct Row {
    std::vector<Rational> vals;
    size_t pivot;
    std::vector<Rational> combo;
  };
  std::vector<Row> rows;
  Matrix power = Matrix::identity(n);
  for (int k = 0;; ++k) {
    std::vector<Rational> v = to_rat(power);
    std::vector<Rational> combo(static_cast<size_t>(k) + 1, Rational(0));
    combo[k] = 1;
    for (const Row& r : rows) {
      if (v[r.pivot] == 0) continue;
      Rational f = v[r.pivot] / r.vals[r.pivot];
      for (size_t i = 0; i < len; ++i)
        if (r.vals[i] != 0) v[i] -= f * r.vals[i];
      for (size_t i = 0; i < r.combo.size(); ++i) combo[i] -= f * r.combo[i];
    }
    size_t pivot = len;
    for (size_t i = 0; i < len; ++i)
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == len) return poly_normalize(std::move(combo));
    rows.push_back({std::move(v), pivot, std::move(combo)});
    power = power * m;
    if (k > n) throw ExactError("minimal polynomial iteration overran");  // unreachable
  }
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = poly_derivative(p);
  if (!d.empty()) chain.push_back(d);
  while (chain.back().size() > 1) {
    Poly q, r;
    poly_divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

static int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int var = 0, last = 0;
  for (const Poly& p : chain) {
    Rational v = poly_eval(p, x);
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// Integer roots of a monic integer polynomial, by Sturm bisection on the
// half-integer grid (a monic integer polynomial cannot vanish there).
static std::vector<Rational> integer_roots_monic(const Poly& monic) {
  Poly sf;  // squarefree part
  {
    Poly g = poly_gcd(monic, poly_derivative(monic));
    Poly q, r;
    poly_divmod(monic, g, q, r);
    sf = poly_monic(q);
  }
  if (poly_degree(sf) == 0) return {};
  // Cauchy bound on |roots|
  Rational bound(1);
  for (size_t i = 0; i + 1 < sf.size(); ++i) {
    Rational c = abs(sf[i]);
    if (c > bound) bound = c;
  }
  bound += 1;
  mpz_class b_int = bound.get_num() / bound.get_den() + 1;
  std::vector<Poly> chain = sturm_chain(sf);
  std::vector<Rational> found;
  struct Interval {
    Rational lo, hi;
  };
  Rational half(1, 2);
  std::vector<Interval> stack;
  stack.push_back({Rational(-b_int) - half, Rational(b_int) + half});
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (sturm_count(chain, iv.lo, iv.hi) == 0) continue;
    if (iv.hi - iv.lo == 1) {
      Rational candidate = iv.lo + half;  // the unique integer in (lo, hi]
      if (poly_eval(sf, candidate) == 0) found.push_back(candidate);
      continue;
    }
    Rational span = iv.hi - iv.lo;
    mpz_class steps = span.get_num() / span.get_den() / 2;
    Rational mid = iv.lo + Rational(steps);
    if (mid <= iv.lo || mid >= iv.hi) mid = iv.lo + 1;
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  std::sort(found.begin(), found.end());
  return found;
}

RationalRoots rational_roots(const Poly& p_in) {
  RationalRoots out;
  Poly p = poly_normalize(p_in);
  if (poly_degree(p) <= 0) {
    out.cofactor = poly_monic(p);
    return out;
  }
  // Clear denominators to an integer polynomial.
  mpz_class den(1);
  for (const Rational& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
  Poly ip = p;
  for (auto& c : ip) {
    c *= Rational(den);
    if (c.get_den() != 1) throw ExactError("denominator clearing failed");
  }
  // Monic substitution y = lc * x: roots of ip at x correspond to integer
  // roots y of the monic polynomial with coefficients lc^(d-1-i) * c_i.
  Rational lc = ip.back();
  int d = poly_degree(ip);
  Poly monic(ip.size());
  Rational pw(1);
  for (int i = d; i >= 0; --i) {
    monic[i] = ip[i] * pw;
    pw *= lc;
  }
  monic = poly_monic(monic);  // scale so the leading coefficient is exactly 1
  for (const Rational& roo : integer_roots_monic(monic)) {
    Rational root = roo / lc;
    // multiplicity by repeated division of the original polynomial
    Poly lin{-root, Rational(1)};
    Poly work = poly_monic(p);
    int mult = 0;
    while (true) {
      Poly q, r;
      poly_divmod(work, lin, q, r);
      if (!r.empty()) break;
      work = q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(root, mult);
  }
  Poly cof = poly_monic(p);
  for (const auto& [root, mult] : out.roots) {
    Poly lin{-root, Rational(1)};
    for (int i = 0; i < mult; ++i) {
      Poly q, r;
      poly_divmod(cof, lin, q, r);
      cof = q;
    }
  }
  out.cofactor = cof;
  return out;
}

bool is_rational_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  mpz_class num = r.get_num(), den = r.get_den();
  return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

bool quadratic_irreducible(const Rational& b, const Rational& c) {
  return !is_rational_square(b * b - 4 * c);
}

}  // namespace liesalg
