#pragma once

// Dense exact matrices with RREF, solve, kernel, rank and inverse.
// Vectors throughout the kernel are coordinate rows; a linear map is a matrix
// acting on the right of a row vector.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xpa/field.hpp"

namespace xpa {

using Vec = std::vector<Fel>;

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Fel> entries)
      : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
      throw XpaError("ShapeMismatch", "entry count does not match rows*cols");
    for (auto& x : e_) x = field_.norm(x);
  }

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(Field f, const std::vector<Vec>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != nc)
        throw XpaError("ShapeMismatch", "ragged row list");
      for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = f.norm(rows[i][j]);
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fel& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Fel& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = field_.norm(v[j]);
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw XpaError("ShapeMismatch", "matrix product shape");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Fel& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Fel& b = o.at(k, j);
          if (b == 0) continue;
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, b));
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw XpaError("ShapeMismatch", "matrix sum shape");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(r.e_[i], o.e_[i]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw XpaError("ShapeMismatch", "matrix difference shape");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.sub(r.e_[i], o.e_[i]);
    return r;
  }

  Matrix scaled(const Fel& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = field_.mul(x, c);
    return r;
  }

  Matrix transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw XpaError("ShapeMismatch", "vstack column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    r.e_.assign(e_.begin(), e_.end());
    r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
    return r;
  }

  Matrix hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw XpaError("ShapeMismatch", "hstack row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  Matrix columns(std::size_t from, std::size_t count) const {
    Matrix r(field_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) r.at(i, j) = at(i, from + j);
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        s += field_.to_string(at(i, j));
        if (j + 1 < cols_) s += ",";
      }
      s += "]";
      if (i + 1 < rows_) s += ",";
    }
    return s + "]";
  }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Fel> e_;
};

inline Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

inline Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

inline Vec vec_scale(const Field& f, const Fel& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

/// Row vector times matrix.
inline Vec vec_apply(const Field& f, const Vec& v, const Matrix& m) {
  if (v.size() != m.rows()) throw XpaError("ShapeMismatch", "vec_apply shape");
  Vec r = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Fel& b = m.at(i, j);
      if (b == 0) continue;
      r[j] = f.add(r[j], f.mul(v[i], b));
    }
  }
  return r;
}

/// Unique reduced row-echelon form plus the pivot column indices, in order.
inline std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    Fel piv_inv = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), piv_inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Fel factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

inline std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

/// Solves a*x = b for x (column convention); free variables are set to zero.
/// Returns nullopt when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw XpaError("ShapeMismatch", "solve row mismatch");
  const Field& f = a.field();
  auto [red, pivots] = rref(a.hstack(b));
  // A pivot in the b-part means inconsistency.
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(pivots[i], j) = red.at(i, a.cols() + j);
  return x;
}

/// RREF basis (rows) of the right null space {v : a * v^T = 0}.
inline Matrix kernel(const Matrix& a) {
  const Field& f = a.field();
  auto [red, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(f, a.cols());
    v[c] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(red.at(i, c));
    basis.push_back(v);
  }
  Matrix k = Matrix::from_rows(f, basis);
  if (k.rows() == 0) return Matrix(f, 0, a.cols());
  return rref(k).first;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

inline std::string vec_to_string(const Field& f, const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += f.to_string(v[i]);
    if (i + 1 < v.size()) s += ",";
  }
  return s + "]";
}

}  // namespace xpa
