#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liesalg {

using Rational = mpq_class;

enum class Field { Q, QI };

inline const char* field_name(Field f) { return f == Field::Q ? "Q" : "Q(i)"; }

// Reduced fraction with positive denominator.
Rational make_rational(long num, long den = 1);
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

// Element of Q(i) = Q + Qi. Values with im == 0 behave exactly like
// rationals, so the same type serves both base fields; containers carry
// the field tag.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}            // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  Scalar conj() const { return {re, -im}; }

  // |z|^2 as a rational; positive unless z = 0.
  Rational norm() const { return re * re + im * im; }

  Scalar operator-() const { return {-re, -im}; }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (im == 0 && o.im == 0) {
      re *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

Scalar scalar_inverse(const Scalar& s);
std::string scalar_to_string(const Scalar& s);

struct ExactError : std::runtime_error {
  explicit ExactError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liesalg
