#include "liesalg/scalar.hpp"

namespace liesalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw ExactError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ExactError("empty rational literal");
  // Accept "p" and "p/q" with optional leading minus; digits only otherwise.
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t start = (t[0] == '-') ? 1 : 0;
    if (start == t.size()) return false;
    for (size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(s)) throw ExactError("bad rational literal: " + s);
  } else {
    if (!digits(s.substr(0, slash)) || !digits(s.substr(slash + 1)))
      throw ExactError("bad rational literal: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw ExactError("bad rational literal: " + s);
  if (r.get_den() == 0) throw ExactError("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ExactError("division by zero scalar");
  if (im == 0 && o.im == 0) {
    re /= o.re;
    return *this;
  }
  Rational n = o.norm();
  Rational r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = std::move(r);
  return *this;
}

Scalar scalar_inverse(const Scalar& s) {
  Scalar one(1);
  return one / s;
}

std::string scalar_to_string(const Scalar& s) {
  if (s.im == 0) return rational_to_string(s.re);
  return rational_to_string(s.re) + (sgn(s.im) >= 0 ? "+" : "") + rational_to_string(s.im) + "i";
}

}  // namespace liesalg
