#pragma once

// Finite-dimensional associative algebras over an exact field, presented by
// structure constants on a fixed basis. Algebras may be non-unital.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xpa/matrix.hpp"
#include "xpa/subspace.hpp"

namespace xpa {

class StructureAlgebra {
 public:
  /// c[i][j] is the coordinate vector of b_i * b_j. Associativity is checked
  /// on all basis triples at construction; the violating triple is the witness.
  static StructureAlgebra make(Field f, std::vector<std::string> basis_names,
                               std::vector<std::vector<Vec>> c) {
    StructureAlgebra a = make_unchecked(f, std::move(basis_names), std::move(c));
    if (auto w = a.associativity_witness())
      throw XpaError("NotAssociative", "structure constants violate associativity", *w);
    return a;
  }

  /// No associativity check; for constructions that run their own oracle.
  static StructureAlgebra make_unchecked(Field f, std::vector<std::string> basis_names,
                                         std::vector<std::vector<Vec>> c) {
    StructureAlgebra a;
    a.field_ = f;
    a.names_ = std::move(basis_names);
    a.c_ = std::move(c);
    std::size_t n = a.names_.size();
    if (a.c_.size() != n) throw XpaError("ShapeMismatch", "structure tensor shape");
    for (auto& row : a.c_) {
      if (row.size() != n) throw XpaError("ShapeMismatch", "structure tensor shape");
      for (auto& v : row) {
        if (v.size() != n) throw XpaError("ShapeMismatch", "structure tensor shape");
        for (auto& x : v) x = f.norm(x);
      }
    }
    return a;
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& basis_product(std::size_t i, std::size_t j) const { return c_[i][j]; }

  Vec basis_vector(std::size_t i) const {
    Vec v = zero_vec(field_, dim());
    v[i] = field_.one();
    return v;
  }

  /// Bilinear extension of the structure constants.
  Vec multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw XpaError("ShapeMismatch", "algebra product operand length");
    Vec r = zero_vec(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        Fel coef = field_.mul(x[i], y[j]);
        const Vec& cij = c_[i][j];
        for (std::size_t l = 0; l < dim(); ++l) {
          if (cij[l] == 0) continue;
          r[l] = field_.add(r[l], field_.mul(coef, cij[l]));
        }
      }
    }
    return r;
  }

  /// First basis triple where (b_i b_j) b_k != b_i (b_j b_k), if any.
  std::optional<std::string> associativity_witness() const {
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec& cij = c_[i][j];
        for (std::size_t k = 0; k < n; ++k) {
          Vec lhs = zero_vec(field_, n), rhs = zero_vec(field_, n);
          for (std::size_t l = 0; l < n; ++l) {
            if (cij[l] != 0)
              for (std::size_t t = 0; t < n; ++t)
                if (c_[l][k][t] != 0)
                  lhs[t] = field_.add(lhs[t], field_.mul(cij[l], c_[l][k][t]));
            if (c_[j][k][l] != 0)
              for (std::size_t t = 0; t < n; ++t)
                if (c_[i][l][t] != 0)
                  rhs[t] = field_.add(rhs[t], field_.mul(c_[j][k][l], c_[i][l][t]));
          }
          if (lhs != rhs)
            return "(" + names_[i] + "," + names_[j] + "," + names_[k] + ")";
        }
      }
    return std::nullopt;
  }

  SubspaceBasis full_space() const { return SubspaceBasis::full(field_, dim()); }
  SubspaceBasis zero_space() const { return SubspaceBasis::zero(field_, dim()); }

  /// RREF basis of span{u v : u in basis(U), v in basis(V)}.
  SubspaceBasis subspace_product(const SubspaceBasis& u, const SubspaceBasis& v) const {
    check_subspace(u);
    check_subspace(v);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j)
        rows.push_back(multiply(u.basis_vector(i), v.basis_vector(j)));
    return SubspaceBasis::span(field_, rows, dim());
  }

  bool is_idempotent_subspace(const SubspaceBasis& u) const {
    return subspace_product(u, u) == u;
  }

  /// {x in U : x W = 0}.
  SubspaceBasis left_annihilator_in(const SubspaceBasis& u, const SubspaceBasis& w) const {
    check_subspace(u);
    check_subspace(w);
    if (u.dim() == 0) return zero_space();
    if (w.dim() == 0) return u;
    // Rows of the constraint matrix: coefficient c of u-basis vectors,
    // stacked products (sum_i c_i u_i) w_j = 0 for every j.
    Matrix constraints(field_, u.dim(), w.dim() * dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j) {
        Vec p = multiply(u.basis_vector(i), w.basis_vector(j));
        for (std::size_t l = 0; l < dim(); ++l) constraints.at(i, j * dim() + l) = p[l];
      }
    Matrix k = kernel(constraints.transposed());
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k.rows(); ++i) rows.push_back(u.from_coords(k.row(i)));
    return SubspaceBasis::span(field_, rows, dim());
  }

  /// {x in U : W x = 0}.
  SubspaceBasis right_annihilator_in(const SubspaceBasis& u, const SubspaceBasis& w) const {
    check_subspace(u);
    check_subspace(w);
    if (u.dim() == 0) return zero_space();
    if (w.dim() == 0) return u;
    Matrix constraints(field_, u.dim(), w.dim() * dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j) {
        Vec p = multiply(w.basis_vector(j), u.basis_vector(i));
        for (std::size_t l = 0; l < dim(); ++l) constraints.at(i, j * dim() + l) = p[l];
      }
    Matrix k = kernel(constraints.transposed());
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k.rows(); ++i) rows.push_back(u.from_coords(k.row(i)));
    return SubspaceBasis::span(field_, rows, dim());
  }

  bool is_ideal(const SubspaceBasis& u) const {
    SubspaceBasis full = full_space();
    return u.contains_subspace(subspace_product(full, u)) &&
           u.contains_subspace(subspace_product(u, full));
  }

  /// Two-sided identity element, if the algebra has one.
  std::optional<Vec> unit_element() const {
    std::size_t n = dim();
    if (n == 0) return Vec{};
    // Unknown u (length n); equations u b_j = b_j and b_j u = b_j.
    Matrix a(field_, 2 * n * n, n);
    Matrix b(field_, 2 * n * n, 1);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t i = 0; i < n; ++i) {
          a.at(row, i) = c_[i][j][l];
          a.at(row + 1, i) = c_[j][i][l];
        }
        b.at(row, 0) = (l == j) ? field_.one() : field_.zero();
        b.at(row + 1, 0) = b.at(row, 0);
        row += 2;
      }
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    Vec u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = x->at(i, 0);
    return u;
  }

  /// Restriction of the algebra to a multiplicatively closed subspace, in the
  /// subspace's canonical basis. Labels are inherited positionally.
  StructureAlgebra restricted_to(const SubspaceBasis& s,
                                 const std::string& label_prefix = "s") const {
    check_subspace(s);
    std::size_t d = s.dim();
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec p = multiply(s.basis_vector(i), s.basis_vector(j));
        auto coords = s.coords(p);
        if (!coords)
          throw XpaError("NotClosed", "subspace is not closed under multiplication");
        c[i][j] = *coords;
      }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back(label_prefix + std::to_string(i));
    return make_unchecked(field_, names, c);
  }

  bool operator==(const StructureAlgebra& o) const {
    return field_ == o.field_ && names_ == o.names_ && c_ == o.c_;
  }

 private:
  void check_subspace(const SubspaceBasis& s) const {
    if (s.ambient_dim() != dim() || s.field() != field_)
      throw XpaError("AmbientMismatch", "subspace does not live in this algebra");
  }

  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> c_;
};

/// A two-sided ideal, verified at construction.
class Ideal {
 public:
  Ideal(std::shared_ptr<const StructureAlgebra> ambient, SubspaceBasis space)
      : ambient_(std::move(ambient)), space_(std::move(space)) {
    if (!ambient_->is_ideal(space_))
      throw XpaError("NotIdeal", "subspace is not a two-sided ideal");
  }

  const StructureAlgebra& ambient() const { return *ambient_; }
  std::shared_ptr<const StructureAlgebra> ambient_ptr() const { return ambient_; }
  const SubspaceBasis& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// Product of two ideal elements given in ideal coordinates, in ideal
  /// coordinates (ideals are closed under multiplication).
  Vec multiply_coords(const Vec& a, const Vec& b) const {
    Vec p = ambient_->multiply(space_.from_coords(a), space_.from_coords(b));
    auto c = space_.coords(p);
    if (!c) throw XpaError("InternalInconsistency", "ideal product escaped the ideal");
    return *c;
  }

  bool operator==(const Ideal& o) const {
    return *ambient_ == *o.ambient_ && space_ == o.space_;
  }

 private:
  std::shared_ptr<const StructureAlgebra> ambient_;
  SubspaceBasis space_;
};

}  // namespace xpa
