#include "liesalg/matrix.hpp"

#include <algorithm>

namespace liesalg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols) throw ExactError("ragged row list");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Matrix::all_rational() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_rational(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw ExactError("matrix product dimension mismatch");
  Matrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw ExactError("matrix sum dimension mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw ExactError("matrix difference dimension mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.a) s *= c;
  return r;
}

Vec matvec(const Matrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.cols) throw ExactError("apply dimension mismatch");
  Vec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

Scalar dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw ExactError("dot dimension mismatch");
  Scalar s;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  return s;
}

Vec vec_add(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec vec_scaled(const Vec& x, const Scalar& c) {
  Vec r = x;
  for (auto& s : r) s *= c;
  return r;
}

bool vec_is_zero(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); });
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.mat = m;
  Matrix& w = res.mat;
  int pr = 0;  // pivot row
  for (int pc = 0; pc < w.cols && pr < w.rows; ++pc) {
    int sel = -1;
    for (int i = pr; i < w.rows; ++i)
      if (!w.at(i, pc).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(pr, j));
    Scalar inv = scalar_inverse(w.at(pr, pc));
    for (int j = pc; j < w.cols; ++j) w.at(pr, j) *= inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == pr) continue;
      Scalar f = w.at(i, pc);
      if (f.is_zero()) continue;
      for (int j = pc; j < w.cols; ++j) w.at(i, j) -= f * w.at(pr, j);
    }
    res.pivots.push_back(pc);
    ++pr;
  }
  res.rank = pr;
  return res;
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int j = 0; j < m.cols; ++j) {
      if (p < r.pivots.size() && r.pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  Matrix k(static_cast<int>(free_cols.size()), m.cols);
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k.at(static_cast<int>(fi), f) = Scalar(1);
    for (size_t p = 0; p < r.pivots.size(); ++p)
      k.at(static_cast<int>(fi), r.pivots[p]) = -r.mat.at(static_cast<int>(p), f);
  }
  return k;
}

int rank_of(const Matrix& m) { return rref(m).rank; }

Inertia signature(const Matrix& m) {
  if (!m.is_square()) throw ExactError("signature: matrix not square");
  if (!m.all_rational()) throw ExactError("signature: matrix not over Q");
  if (!m.is_symmetric()) throw ExactError("signature: matrix not symmetric");
  int n = m.rows;
  Matrix w = m;
  Inertia res;
  // Symmetric congruence reduction: repeatedly diagonalize the leading
  // block, fixing zero diagonals with a row/column addition first.
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    // find an unreduced index with nonzero diagonal
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !w.at(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) {
      // all remaining diagonals are zero: look for an off-diagonal entry
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          if (!w.at(i, j).is_zero()) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi < 0) break;  // remaining block is zero
      // congruence: add row/col bj to bi, producing 2*w(bi,bj) on the diagonal
      for (int j = 0; j < n; ++j) w.at(bi, j) += w.at(bj, j);
      for (int i = 0; i < n; ++i) w.at(i, bi) += w.at(i, bj);
      p = bi;
    }
    Scalar d = w.at(p, p);
    for (int i = 0; i < n; ++i) {
      if (i == p || done[i]) continue;
      if (w.at(i, p).is_zero()) continue;
      Scalar f = w.at(i, p) / d;
      for (int j = 0; j < n; ++j) w.at(i, j) -= f * w.at(p, j);
      for (int j = 0; j < n; ++j) w.at(j, i) -= f * w.at(j, p);
    }
    done[p] = true;
    if (sgn(d.re) > 0)
      ++res.pos;
    else
      ++res.neg;
  }
  res.zero = n - res.pos - res.neg;
  return res;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          if (!y.at(k, l).is_zero()) r.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
    }
  return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows) throw ExactError("solve dimension mismatch");
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  RrefResult r = rref(aug);
  for (int p : r.pivots)
    if (p == m.cols) return std::nullopt;  // inconsistent
  Vec x(m.cols);
  for (size_t p = 0; p < r.pivots.size(); ++p) x[r.pivots[p]] = r.mat.at(static_cast<int>(p), m.cols);
  return x;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw ExactError("determinant: matrix not square");
  Matrix w = m;
  int n = m.rows;
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!w.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Scalar(0);
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(sel, j), w.at(c, j));
      det = -det;
    }
    det *= w.at(c, c);
    Scalar inv = scalar_inverse(w.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      Scalar f = w.at(i, c) * inv;
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return det;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  int cols = 0, rows = 0;
  for (const auto& p : parts) {
    if (p.cols == 0 && p.rows == 0) continue;
    if (cols == 0) cols = p.cols;
    if (p.cols != cols) throw ExactError("vstack column mismatch");
    rows += p.rows;
  }
  Matrix r(rows, cols);
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rows; ++i)
      for (int j = 0; j < p.cols; ++j) r.at(off + i, j) = p.at(i, j);
    off += p.rows;
  }
  return r;
}

Vec matrix_to_vec(const Matrix& m) { return m.a; }

Matrix vec_to_matrix(const Vec& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols) throw ExactError("vec_to_matrix size mismatch");
  Matrix m(rows, cols);
  m.a = v;
  return m;
}

}  // namespace liesalg
