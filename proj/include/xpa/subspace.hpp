#pragma once

// Subspaces of k^n in canonical (RREF) form. Canonicality makes subspace
// equality a plain matrix comparison.

#include <cstddef>
#include <optional>
#include <vector>

#include "xpa/matrix.hpp"

namespace xpa {

class SubspaceBasis {
 public:
  SubspaceBasis() : ambient_dim_(0) {}

  static SubspaceBasis zero(Field f, std::size_t ambient_dim) {
    SubspaceBasis s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = Matrix(f, 0, ambient_dim);
    return s;
  }

  static SubspaceBasis full(Field f, std::size_t ambient_dim) {
    SubspaceBasis s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = Matrix::identity(f, ambient_dim);
    return s;
  }

  /// Span of the given row vectors, canonicalized.
  static SubspaceBasis span(Field f, const std::vector<Vec>& vectors,
                            std::size_t ambient_dim) {
    if (vectors.empty()) return zero(f, ambient_dim);
    Matrix m = Matrix::from_rows(f, vectors);
    if (m.cols() != ambient_dim)
      throw XpaError("ShapeMismatch", "span vector length != ambient dim");
    auto [red, pivots] = rref(m);
    SubspaceBasis s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = Matrix(f, pivots.size(), ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.set_row(i, red.row(i));
    return s;
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool operator==(const SubspaceBasis& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
  }
  bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }

  /// Exact membership test: reduce v against the RREF rows.
  bool contains(const Vec& v) const { return coords(v).has_value(); }

  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<Vec> coords(const Vec& v) const {
    if (v.size() != ambient_dim_)
      throw XpaError("ShapeMismatch", "membership vector length != ambient dim");
    const Field& f = field();
    // RREF rows have elementary pivot columns, so coordinates read off directly.
    std::vector<std::size_t> pivots = pivot_columns();
    Vec c(dim(), f.zero());
    Vec rem = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = rem[pivots[i]];
      if (c[i] != 0) rem = vec_sub(f, rem, vec_scale(f, c[i], basis_.row(i)));
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return c;
  }

  /// Ambient vector with the given canonical-basis coordinates.
  Vec from_coords(const Vec& c) const {
    if (c.size() != dim()) throw XpaError("ShapeMismatch", "coordinate length != dim");
    return vec_apply(field(), c, basis_);
  }

  /// Pivot column of each row (the basis is stored in RREF).
  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> pivots(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t c = 0;
      while (c < ambient_dim_ && basis_.at(i, c) == 0) ++c;
      pivots[i] = c;
    }
    return pivots;
  }

  bool contains_subspace(const SubspaceBasis& o) const {
    check_ambient(o);
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i))) return false;
    return true;
  }

  SubspaceBasis sum(const SubspaceBasis& o) const {
    check_ambient(o);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
    for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_vector(i));
    return span(field(), rows, ambient_dim_);
  }

  /// Intersection via the kernel of the stacked bases: a combination of our
  /// rows equals a combination of theirs exactly on the stacked null space.
  SubspaceBasis intersect(const SubspaceBasis& o) const {
    check_ambient(o);
    if (dim() == 0 || o.dim() == 0) return zero(field(), ambient_dim_);
    const Field& f = field();
    Matrix stacked = basis_.vstack(o.basis_).transposed();  // n x (d1+d2)
    Matrix k = kernel(stacked);                             // rows: (c1, c2), c1*B1 = -c2*B2
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k.rows(); ++i) {
      Vec r = k.row(i);
      Vec c1(r.begin(), r.begin() + dim());
      rows.push_back(vec_apply(f, c1, basis_));
    }
    return span(f, rows, ambient_dim_);
  }

 private:
  void check_ambient(const SubspaceBasis& o) const {
    if (ambient_dim_ != o.ambient_dim_ || field() != o.field())
      throw XpaError("AmbientMismatch", "subspaces live in different ambient spaces");
  }

  std::size_t ambient_dim_;
  Matrix basis_;
};

}  // namespace xpa
