#pragma once

// Multipliers of an ideal: compatible pairs (R, L) of linear endomorphisms,
// stored as matrices in the ideal's canonical basis. R acts on the right of a
// coordinate row (a -> aR), L likewise (a -> La).

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "xpa/algebra.hpp"

namespace xpa {

class Multiplier {
 public:
  /// Validated construction. Checks, exactly and with witnesses:
  ///   compatibility   (aR)b = a(Lb)       for all basis a, b of I,
  ///   module maps     (xa)R = x(aR), L(ax) = (La)x   for all ambient basis x.
  static Multiplier make(std::shared_ptr<const Ideal> ideal, Matrix r, Matrix l) {
    Multiplier m(std::move(ideal), std::move(r), std::move(l));
    m.validate();
    return m;
  }

  static Multiplier identity(std::shared_ptr<const Ideal> ideal) {
    std::size_t d = ideal->dim();
    Field f = ideal->ambient().field();
    return Multiplier(std::move(ideal), Matrix::identity(f, d), Matrix::identity(f, d));
  }

  /// The multiplier (R_a, L_a) induced by an algebra element a (ambient
  /// coordinates): x R_a = x a, L_a x = a x.
  static Multiplier from_element(std::shared_ptr<const Ideal> ideal, const Vec& a) {
    const StructureAlgebra& amb = ideal->ambient();
    const SubspaceBasis& s = ideal->space();
    std::size_t d = ideal->dim();
    Matrix r(amb.field(), d, d), l(amb.field(), d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto rc = s.coords(amb.multiply(s.basis_vector(i), a));
      auto lc = s.coords(amb.multiply(a, s.basis_vector(i)));
      if (!rc || !lc)
        throw XpaError("MembershipError", "element does not multiply the ideal into itself");
      r.set_row(i, *rc);
      l.set_row(i, *lc);
    }
    return make(std::move(ideal), std::move(r), std::move(l));
  }

  const Ideal& ideal() const { return *ideal_; }
  std::shared_ptr<const Ideal> ideal_ptr() const { return ideal_; }
  const Matrix& r_matrix() const { return r_; }
  const Matrix& l_matrix() const { return l_; }
  std::size_t dim() const { return ideal_->dim(); }

  bool operator==(const Multiplier& o) const { return r_ == o.r_ && l_ == o.l_; }
  bool operator!=(const Multiplier& o) const { return !(*this == o); }

  bool is_identity() const {
    Matrix id = Matrix::identity(r_.field(), r_.rows());
    return r_ == id && l_ == id;
  }

  /// x w, x given and returned in ideal coordinates.
  Vec apply_right_coords(const Vec& x) const { return vec_apply(field(), x, r_); }
  /// w x, ideal coordinates.
  Vec apply_left_coords(const Vec& x) const { return vec_apply(field(), x, l_); }

  /// x w for x an ambient vector lying in the ideal (membership checked).
  Vec apply_right(const Vec& x) const {
    auto c = ideal_->space().coords(x);
    if (!c) throw XpaError("MembershipError", "vector is not in the carrier ideal");
    return ideal_->space().from_coords(apply_right_coords(*c));
  }

  Vec apply_left(const Vec& x) const {
    auto c = ideal_->space().coords(x);
    if (!c) throw XpaError("MembershipError", "vector is not in the carrier ideal");
    return ideal_->space().from_coords(apply_left_coords(*c));
  }

 private:
  Multiplier(std::shared_ptr<const Ideal> ideal, Matrix r, Matrix l)
      : ideal_(std::move(ideal)), r_(std::move(r)), l_(std::move(l)) {
    std::size_t d = ideal_->dim();
    if (r_.rows() != d || r_.cols() != d || l_.rows() != d || l_.cols() != d)
      throw XpaError("ShapeMismatch", "multiplier matrices must be dim(I) x dim(I)");
  }

  const Field& field() const { return ideal_->ambient().field(); }

  void validate() const {
    const StructureAlgebra& amb = ideal_->ambient();
    const SubspaceBasis& s = ideal_->space();
    const Field& f = field();
    std::size_t d = ideal_->dim(), n = amb.dim();
    // (aR)b = a(Lb) on ideal basis pairs.
    for (std::size_t i = 0; i < d; ++i) {
      Vec aR = s.from_coords(r_.row(i));
      for (std::size_t j = 0; j < d; ++j) {
        Vec Lb = s.from_coords(l_.row(j));
        Vec lhs = amb.multiply(aR, s.basis_vector(j));
        Vec rhs = amb.multiply(s.basis_vector(i), Lb);
        if (lhs != rhs)
          throw XpaError("CompatibilityViolation", "(aR)b != a(Lb)",
                         "a=" + vec_to_string(f, s.basis_vector(i)) +
                             " b=" + vec_to_string(f, s.basis_vector(j)));
      }
    }
    // (xa)R = x(aR) and L(ax) = (La)x over the ambient basis.
    for (std::size_t m = 0; m < n; ++m) {
      Vec x = amb.basis_vector(m);
      for (std::size_t i = 0; i < d; ++i) {
        Vec a = s.basis_vector(i);
        auto xa = s.coords(amb.multiply(x, a));
        auto ax = s.coords(amb.multiply(a, x));
        if (!xa || !ax)
          throw XpaError("MembershipError", "carrier is not an ideal");
        Vec lhs_r = s.from_coords(vec_apply(f, *xa, r_));
        Vec rhs_r = amb.multiply(x, s.from_coords(r_.row(i)));
        if (lhs_r != rhs_r)
          throw XpaError("ModuleMapViolation", "(xa)R != x(aR)",
                         "x=" + vec_to_string(f, x) + " a=" + vec_to_string(f, a));
        Vec lhs_l = s.from_coords(vec_apply(f, *ax, l_));
        Vec rhs_l = amb.multiply(s.from_coords(l_.row(i)), x);
        if (lhs_l != rhs_l)
          throw XpaError("ModuleMapViolation", "L(ax) != (La)x",
                         "x=" + vec_to_string(f, x) + " a=" + vec_to_string(f, a));
      }
    }
  }

  std::shared_ptr<const Ideal> ideal_;
  Matrix r_, l_;
};

/// Composition in M(I): a(uw) = (au)w and (uw)a = u(wa).
inline Multiplier mult_compose(const Multiplier& u, const Multiplier& w) {
  if (!(u.ideal() == w.ideal()))
    throw XpaError("AmbientMismatch", "multipliers live on different ideals");
  return Multiplier::make(u.ideal_ptr(), u.r_matrix() * w.r_matrix(),
                          w.l_matrix() * u.l_matrix());
}

/// Inverse multiplier, when both matrices are invertible.
inline std::optional<Multiplier> mult_invert(const Multiplier& u) {
  auto ri = inverse(u.r_matrix());
  auto li = inverse(u.l_matrix());
  if (!ri || !li) return std::nullopt;
  return Multiplier::make(u.ideal_ptr(), *ri, *li);
}

/// RREF basis of the solution space of all valid (R, L) pairs, as vectors of
/// length 2 d^2 (R entries row-major, then L entries row-major).
inline Matrix multiplier_space(const Ideal& ideal) {
  const StructureAlgebra& amb = ideal.ambient();
  const SubspaceBasis& s = ideal.space();
  const Field& f = amb.field();
  std::size_t d = ideal.dim(), n = amb.dim();
  std::size_t unknowns = 2 * d * d;
  if (d == 0) return Matrix(f, 0, 0);
  auto r_idx = [d](std::size_t i, std::size_t k) { return i * d + k; };
  auto l_idx = [d](std::size_t i, std::size_t k) { return d * d + i * d + k; };

  std::vector<Vec> rows;  // each row: one scalar equation over the unknowns
  auto emit = [&](Vec&& eq) { rows.push_back(std::move(eq)); };

  // Compatibility: sum_k r[i][k] (u_k b_j) - sum_k l[j][k] (a_i u_k) = 0.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Vec> contrib(unknowns, Vec());
      for (std::size_t t = 0; t < n; ++t) {
        Vec eq = zero_vec(f, unknowns);
        bool nontrivial = false;
        for (std::size_t k = 0; k < d; ++k) {
          Vec p1 = amb.multiply(s.basis_vector(k), s.basis_vector(j));
          Vec p2 = amb.multiply(s.basis_vector(i), s.basis_vector(k));
          if (p1[t] != 0) { eq[r_idx(i, k)] = p1[t]; nontrivial = true; }
          if (p2[t] != 0) { eq[l_idx(j, k)] = f.neg(p2[t]); nontrivial = true; }
        }
        if (nontrivial) emit(std::move(eq));
      }
    }
  // Module-map conditions over the full ambient basis.
  for (std::size_t m = 0; m < n; ++m) {
    Vec x = amb.basis_vector(m);
    for (std::size_t i = 0; i < d; ++i) {
      auto xa = s.coords(amb.multiply(x, s.basis_vector(i)));
      auto ax = s.coords(amb.multiply(s.basis_vector(i), x));
      if (!xa || !ax) throw XpaError("MembershipError", "carrier is not an ideal");
      // (xa)R - x(aR) = 0, coordinatewise in the ambient algebra.
      // (xa)R = sum_{p,k} (xa)_p r[p][k] u_k ; x(aR) = sum_k r[i][k] (x u_k).
      for (std::size_t t = 0; t < n; ++t) {
        Vec eq = zero_vec(f, unknowns);
        bool nontrivial = false;
        for (std::size_t k = 0; k < d; ++k) {
          Vec uk = s.basis_vector(k);
          Vec xuk = amb.multiply(x, uk);
          for (std::size_t p = 0; p < d; ++p) {
            if ((*xa)[p] != 0 && uk[t] != 0) {
              eq[r_idx(p, k)] = f.add(eq[r_idx(p, k)], f.mul((*xa)[p], uk[t]));
              nontrivial = true;
            }
          }
          if (xuk[t] != 0) {
            eq[r_idx(i, k)] = f.sub(eq[r_idx(i, k)], xuk[t]);
            nontrivial = true;
          }
        }
        if (nontrivial) emit(std::move(eq));
      }
      // L(ax) - (La)x = 0.
      for (std::size_t t = 0; t < n; ++t) {
        Vec eq = zero_vec(f, unknowns);
        bool nontrivial = false;
        for (std::size_t k = 0; k < d; ++k) {
          Vec uk = s.basis_vector(k);
          Vec ukx = amb.multiply(uk, x);
          for (std::size_t p = 0; p < d; ++p) {
            if ((*ax)[p] != 0 && uk[t] != 0) {
              eq[l_idx(p, k)] = f.add(eq[l_idx(p, k)], f.mul((*ax)[p], uk[t]));
              nontrivial = true;
            }
          }
          if (ukx[t] != 0) {
            eq[l_idx(i, k)] = f.sub(eq[l_idx(i, k)], ukx[t]);
            nontrivial = true;
          }
        }
        if (nontrivial) emit(std::move(eq));
      }
    }
  }
  if (rows.empty()) return Matrix::identity(f, unknowns);
  return kernel(Matrix::from_rows(f, rows));
}

/// Builds the multiplier with the given coefficient vector in the layout of
/// multiplier_space (validated).
inline Multiplier multiplier_from_flat(std::shared_ptr<const Ideal> ideal, const Vec& flat) {
  std::size_t d = ideal->dim();
  Field f = ideal->ambient().field();
  Matrix r(f, d, d), l(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      r.at(i, k) = flat[i * d + k];
      l.at(i, k) = flat[d * d + i * d + k];
    }
  return Multiplier::make(std::move(ideal), std::move(r), std::move(l));
}

/// (w x) w' = w (x w') for all x in an idempotent ideal.
/// Raises NotIdempotent when I^2 != I, where the property need not hold.
inline bool check_commuting_property(const Ideal& ideal, const Multiplier& u,
                                     const Multiplier& w) {
  if (!ideal.ambient().is_idempotent_subspace(ideal.space()))
    throw XpaError("NotIdempotent", "commuting property requires an idempotent ideal");
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    Vec x = zero_vec(ideal.ambient().field(), ideal.dim());
    x[i] = ideal.ambient().field().one();
    Vec lhs = w.apply_right_coords(u.apply_left_coords(x));
    Vec rhs = u.apply_left_coords(w.apply_right_coords(x));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace xpa
