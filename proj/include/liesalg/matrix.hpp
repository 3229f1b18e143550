#pragma once

#include <optional>
#include <vector>

#include "liesalg/scalar.hpp"

namespace liesalg {

using Vec = std::vector<Scalar>;

// Dense matrix over Q(i); all algorithms are exact and deterministic.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  bool is_zero() const;
  bool is_square() const { return rows == cols; }
  bool is_symmetric() const;
  bool all_rational() const;

  Matrix transpose() const;
  Scalar trace() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

Vec matvec(const Matrix& m, const Vec& v);     // m * v (column vector)
Scalar dot(const Vec& x, const Vec& y);       // plain bilinear dot, no conjugation
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scaled(const Vec& x, const Scalar& c);
bool vec_is_zero(const Vec& x);

struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;
  int rank = 0;
};

// Reduced row echelon form via exact Gauss-Jordan; first nonzero pivot in
// column order, so the output is canonical.
RrefResult rref(const Matrix& m);

// Rows span the null space {v : m v = 0}; the basis is the canonical
// free-column basis read off the RREF and is itself in echelon form.
Matrix kernel_basis(const Matrix& m);

int rank_of(const Matrix& m);

struct Inertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;
};

// Sylvester inertia of a symmetric rational matrix, by exact symmetric
// congruence diagonalization.
Inertia signature(const Matrix& m);

// Kronecker product, row-major block convention:
// result[i*b.rows + k][j*b.cols + l] = a[i][j] * b[k][l].
Matrix kron(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

// Solve a * x = b for the column vector x; nullopt when inconsistent.
// When the solution is not unique the free coordinates are set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

Scalar determinant(const Matrix& m);

// Stack matrices vertically (equal column counts).
Matrix vstack(const std::vector<Matrix>& parts);

Vec matrix_to_vec(const Matrix& m);  // row-major flatten
Matrix vec_to_matrix(const Vec& v, int rows, int cols);

}  // namespace liesalg
