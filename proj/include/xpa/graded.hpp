#pragma once

// Group-graded algebras B = (+)_g B_g and the linking algebra
//   C_g = [ D_g      B_g    ]      D_g = B_g B_{g^-1},
//         [ B_{g^-1} D_{g^-1} ]
// used to decide the crossed-product question corner by corner.

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "xpa/action.hpp"
#include "xpa/group.hpp"
#include "xpa/multiplier.hpp"

namespace xpa {

class GradedAlgebra {
 public:
  /// Validates that the components form a direct-sum decomposition and that
  /// B_g B_h is contained in B_{gh}.
  static GradedAlgebra make(FiniteGroup group,
                            std::shared_ptr<const StructureAlgebra> algebra,
                            std::vector<SubspaceBasis> components) {
    GradedAlgebra b;
    b.group_ = std::move(group);
    b.algebra_ = std::move(algebra);
    b.components_ = std::move(components);
    std::size_t n = b.group_.order();
    if (b.components_.size() != n)
      throw XpaError("ShapeMismatch", "need one component per group element");
    std::size_t total = 0;
    SubspaceBasis sum = b.algebra_->zero_space();
    for (std::size_t g = 0; g < n; ++g) {
      total += b.components_[g].dim();
      sum = sum.sum(b.components_[g]);
    }
    if (total != b.algebra_->dim() || sum != b.algebra_->full_space())
      throw XpaError("NotDirectSum",
                     "components do not decompose the algebra (span dim " +
                         std::to_string(sum.dim()) + ", dim sum " + std::to_string(total) +
                         ", algebra dim " + std::to_string(b.algebra_->dim()) + ")");
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        SubspaceBasis p = b.algebra_->subspace_product(b.components_[g], b.components_[h]);
        if (!b.components_[b.group_.mul(g, h)].contains_subspace(p))
          throw XpaError("NotGraded", "B_g B_h escapes B_{gh}",
                         "g=" + b.group_.name(g) + " h=" + b.group_.name(h));
      }
    return b;
  }

  const FiniteGroup& group() const { return group_; }
  const StructureAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const StructureAlgebra> algebra_ptr() const { return algebra_; }
  const SubspaceBasis& component(std::size_t g) const { return components_[g]; }
  const std::vector<SubspaceBasis>& components() const { return components_; }

  SubspaceBasis component_product(std::size_t g, std::size_t h) const {
    return algebra_->subspace_product(components_[g], components_[h]);
  }

  /// D_g = B_g B_{g^-1}, a subspace of B_1.
  SubspaceBasis dspace(std::size_t g) const {
    return component_product(g, group_.inv(g));
  }

 private:
  FiniteGroup group_;
  std::shared_ptr<const StructureAlgebra> algebra_;
  std::vector<SubspaceBasis> components_;
};

/// Condition (i): B_g B_{g^-1} B_g = B_g for every g.
inline VerificationReport check_condition_i(const GradedAlgebra& b) {
  VerificationReport rep;
  const FiniteGroup& gr = b.group();
  for (std::size_t g = 0; g < gr.order(); ++g) {
    SubspaceBasis triple =
        b.algebra().subspace_product(b.dspace(g), b.component(g));
    bool ok = triple == b.component(g);
    std::string wit;
    if (!ok) {
      // B_g B_{g^-1} B_g is always contained in B_g, so some basis vector of
      // B_g escapes the triple product; name the first one.
      const Field& f = b.algebra().field();
      for (std::size_t i = 0; i < b.component(g).dim(); ++i)
        if (!triple.contains(b.component(g).basis_vector(i))) {
          wit = "x=" + vec_to_string(f, b.component(g).basis_vector(i)) +
                " is in B_g but not in B_g B_{g^-1} B_g (dim " +
                std::to_string(triple.dim()) + " < " +
                std::to_string(b.component(g).dim()) + ")";
          break;
        }
    }
    rep.checks.push_back({"condition_i[" + gr.name(g) + "]", ok, false, wit});
  }
  return rep;
}

/// Homogeneous non-degeneracy: for each g and nonzero x in B_g,
/// x B_{g^-1} != 0 and B_{g^-1} x != 0.
inline VerificationReport check_homogeneous_nondegeneracy(const GradedAlgebra& b) {
  VerificationReport rep;
  const FiniteGroup& gr = b.group();
  const Field& f = b.algebra().field();
  for (std::size_t g = 0; g < gr.order(); ++g) {
    std::size_t gi = gr.inv(g);
    SubspaceBasis lker = b.algebra().left_annihilator_in(b.component(g), b.component(gi));
    SubspaceBasis rker = b.algebra().right_annihilator_in(b.component(g), b.component(gi));
    std::string wit;
    bool ok = lker.dim() == 0 && rker.dim() == 0;
    if (!ok) {
      const SubspaceBasis& k = lker.dim() ? lker : rker;
      wit = "x=" + vec_to_string(f, k.basis_vector(0)) +
            (lker.dim() ? " kills B_{g^-1} on the right" : " is killed by B_{g^-1} on the left");
    }
    rep.checks.push_back({"nondegenerate[" + gr.name(g) + "]", ok, false, wit});
  }
  return rep;
}

/// The linking algebra of the Morita context (D_g, D_{g^-1}, B_g, B_{g^-1}).
/// Its elements are formal 2x2 matrices; products are taken in B with the
/// usual matrix pattern, which kills the cross terms such as B_g * B_g.
class LinkingAlgebra {
 public:
  // Corner indices, row-major in the 2x2 picture.
  enum Corner { R = 0, M = 1, Mp = 2, Rp = 3 };

  LinkingAlgebra(const GradedAlgebra& b, std::size_t g) {
    const FiniteGroup& gr = b.group();
    std::size_t gi = gr.inv(g);
    field_ = b.algebra().field();
    ambient_ = b.algebra_ptr();
    corners_[R] = b.dspace(g);
    corners_[M] = b.component(g);
    corners_[Mp] = b.component(gi);
    corners_[Rp] = b.dspace(gi);
    offsets_[0] = 0;
    for (std::size_t c = 0; c < 4; ++c) offsets_[c + 1] = offsets_[c] + corners_[c].dim();
    std::size_t d = offsets_[4];

    // row/col of each corner in the 2x2 picture.
    static constexpr std::size_t row[4] = {0, 0, 1, 1}, col[4] = {0, 1, 0, 1};
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, zero_vec(field_, d)));
    std::vector<std::string> names;
    static const char* tag[4] = {"r", "m", "n", "s"};
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t i = 0; i < corners_[p].dim(); ++i)
        names.push_back(std::string(tag[p]) + std::to_string(i));
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q) {
        if (col[p] != row[q]) continue;
        std::size_t target = row[p] * 2 + col[q];
        for (std::size_t i = 0; i < corners_[p].dim(); ++i)
          for (std::size_t j = 0; j < corners_[q].dim(); ++j) {
            Vec prod = b.algebra().multiply(corners_[p].basis_vector(i),
                                            corners_[q].basis_vector(j));
            auto coords = corners_[target].coords(prod);
            if (!coords)
              throw XpaError("InternalInconsistency",
                             "corner product escaped its target corner");
            Vec& out = c[offsets_[p] + i][offsets_[q] + j];
            for (std::size_t k = 0; k < coords->size(); ++k)
              out[offsets_[target] + k] = (*coords)[k];
          }
      }
    // Associativity is inherited from B: every triple product is a B-product
    // with the same bracketings, and mismatched patterns vanish on both sides.
    algebra_ = std::make_shared<StructureAlgebra>(
        StructureAlgebra::make_unchecked(field_, std::move(names), std::move(c)));
    full_ideal_ = std::make_shared<Ideal>(algebra_, algebra_->full_space());
  }

  const StructureAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const StructureAlgebra> algebra_ptr() const { return algebra_; }
  std::shared_ptr<const Ideal> full_ideal() const { return full_ideal_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return offsets_[4]; }
  std::size_t corner_dim(Corner c) const { return corners_[c].dim(); }
  std::size_t corner_offset(Corner c) const { return offsets_[c]; }
  const SubspaceBasis& corner_space_in_b(Corner c) const { return corners_[c]; }

  /// Embeds a vector of B lying in the given corner's subspace.
  Vec embed(Corner c, const Vec& x) const {
    auto coords = corners_[c].coords(x);
    if (!coords) throw XpaError("MembershipError", "vector is not in the corner subspace");
    Vec out = zero_vec(field_, dim());
    for (std::size_t k = 0; k < coords->size(); ++k) out[offsets_[c] + k] = (*coords)[k];
    return out;
  }

  /// The i-th corner basis element as a vector of the linking algebra.
  Vec corner_basis(Corner c, std::size_t i) const { return algebra_->basis_vector(offsets_[c] + i); }

  /// Reads off one corner of a linking-algebra vector, as a vector of B.
  Vec project(Corner c, const Vec& x) const {
    Vec coords(corners_[c].dim());
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = x[offsets_[c] + k];
    return corners_[c].from_coords(coords);
  }

  /// True when x is supported entirely inside the given corner.
  bool in_corner(Corner c, const Vec& x) const {
    for (std::size_t k = 0; k < dim(); ++k)
      if (x[k] != 0 && (k < offsets_[c] || k >= offsets_[c] + corners_[c].dim())) return false;
    return true;
  }

  /// e11: x e11 keeps the first column (R, M'), e11 x keeps the first row (R, M).
  Multiplier e11() const { return corner_unit(true); }
  /// e22: x e22 keeps (M, R'), e22 x keeps (M', R').
  Multiplier e22() const { return corner_unit(false); }

 private:
  Multiplier corner_unit(bool first) const {
    std::size_t d = dim();
    Matrix r(field_, d, d), l(field_, d, d);
    auto keep = [&](Matrix& m, Corner c) {
      for (std::size_t k = offsets_[c]; k < offsets_[c] + corners_[c].dim(); ++k)
        m.at(k, k) = field_.one();
    };
    if (first) {
      keep(r, R); keep(r, Mp);   // right action keeps column one
      keep(l, R); keep(l, M);    // left action keeps row one
    } else {
      keep(r, M); keep(r, Rp);
      keep(l, Mp); keep(l, Rp);
    }
    return Multiplier::make(full_ideal_, std::move(r), std::move(l));
  }

  Field field_;
  std::shared_ptr<const StructureAlgebra> ambient_;
  std::array<SubspaceBasis, 4> corners_;
  std::array<std::size_t, 5> offsets_{};
  std::shared_ptr<const StructureAlgebra> algebra_;
  std::shared_ptr<const Ideal> full_ideal_;
};

struct CornerMultiplierPair {
  Multiplier u, v;
};

/// The full identity suite for a corner pair: uv = e11, vu = e22, the
/// normalizations e11 u = u e22 = u and e22 v = v e11 = v, the corner shapes
/// of the eight one-sided actions, and the twenty-four three-factor
/// associativity identities with factors drawn from the four corners.
inline VerificationReport check_uv_properties(const LinkingAlgebra& link,
                                              const Multiplier& u, const Multiplier& v) {
  VerificationReport rep;
  using C = LinkingAlgebra::Corner;
  const StructureAlgebra& alg = link.algebra();
  auto add = [&](std::string name, bool pass, std::string wit = "", bool vac = false) {
    rep.checks.push_back({std::move(name), pass, vac, std::move(wit)});
  };

  add("uv=e11", mult_compose(u, v) == link.e11());
  add("vu=e22", mult_compose(v, u) == link.e22());
  {
    const Multiplier e1 = link.e11(), e2 = link.e22();
    add("e11.u=u", mult_compose(e1, u) == u);
    add("u.e22=u", mult_compose(u, e2) == u);
    add("e22.v=v", mult_compose(e2, v) == v);
    add("v.e11=v", mult_compose(v, e1) == v);
  }

  // Corner shapes: u.M' <= R, u.R' <= M, R.u <= M, M'.u <= R';
  //                v.R <= M', v.M <= R', M.v <= R, R'.v <= M'.
  struct Shape { const Multiplier* m; bool left; C src, dst; const char* name; };
  const Shape shapes[] = {
      {&u, true, C::Mp, C::R, "u.M'<=R"},  {&u, true, C::Rp, C::M, "u.R'<=M"},
      {&u, false, C::R, C::M, "R.u<=M"},   {&u, false, C::Mp, C::Rp, "M'.u<=R'"},
      {&v, true, C::R, C::Mp, "v.R<=M'"},  {&v, true, C::M, C::Rp, "v.M<=R'"},
      {&v, false, C::M, C::R, "M.v<=R"},   {&v, false, C::Rp, C::Mp, "R'.v<=M'"},
  };
  for (const auto& s : shapes) {
    bool ok = true;
    bool vac = link.corner_dim(s.src) == 0;
    for (std::size_t i = 0; i < link.corner_dim(s.src) && ok; ++i) {
      Vec x = link.corner_basis(s.src, i);
      Vec y = s.left ? s.m->apply_left(x) : s.m->apply_right(x);
      ok = link.in_corner(s.dst, y);
    }
    add(s.name, ok, "", vac);
  }

  // Three-factor identities. Each row is w(xy) = (wx)y, (xy)w = x(yw) or
  // (xw)y = x(wy) with w in {u, v} and x, y corner basis elements.
  enum class Pat { LeftOut, RightOut, Middle };
  struct Id { const Multiplier* m; Pat pat; C x, y; const char* name; };
  const Id ids[] = {
      // u, as a left multiplier.
      {&u, Pat::LeftOut, C::Mp, C::R, "u(m'r)=(um')r"},
      {&u, Pat::LeftOut, C::Mp, C::M, "u(m'm)=(um')m"},
      {&u, Pat::LeftOut, C::Rp, C::Mp, "u(r'm')=(ur')m'"},
      {&u, Pat::LeftOut, C::Rp, C::Rp, "u(r'1 r'2)=(u r'1)r'2"},
      // u, as a right multiplier.
      {&u, Pat::RightOut, C::R, C::R, "(r1 r2)u=r1(r2 u)"},
      {&u, Pat::RightOut, C::M, C::Mp, "(m m')u=m(m'u)"},
      {&u, Pat::RightOut, C::Rp, C::Mp, "(r'm')u=r'(m'u)"},
      {&u, Pat::RightOut, C::Mp, C::R, "(m'r)u=m'(ru)"},
      // u in the middle.
      {&u, Pat::Middle, C::R, C::Mp, "(ru)m'=r(um')"},
      {&u, Pat::Middle, C::R, C::Rp, "(ru)r'=r(ur')"},
      {&u, Pat::Middle, C::Mp, C::Mp, "(m'1 u)m'2=m'1(u m'2)"},
      {&u, Pat::Middle, C::Mp, C::Rp, "(m'u)r'=m'(ur')"},
      // v, as a left multiplier.
      {&v, Pat::LeftOut, C::R, C::R, "v(r1 r2)=(v r1)r2"},
      {&v, Pat::LeftOut, C::M, C::Mp, "v(m m')=(vm)m'"},
      {&v, Pat::LeftOut, C::R, C::M, "v(rm)=(vr)m"},
      {&v, Pat::LeftOut, C::M, C::Rp, "v(m r')=(vm)r'"},
      // v, as a right multiplier.
      {&v, Pat::RightOut, C::R, C::M, "(rm)v=r(mv)"},
      {&v, Pat::RightOut, C::M, C::Rp, "(m r')v=m(r'v)"},
      {&v, Pat::RightOut, C::Mp, C::M, "(m'm)v=m'(mv)"},
      {&v, Pat::RightOut, C::Rp, C::Rp, "(r'1 r'2)v=r'1(r'2 v)"},
      // v in the middle.
      {&v, Pat::Middle, C::M, C::R, "(mv)r=m(vr)"},
      {&v, Pat::Middle, C::M, C::M, "(m1 v)m2=m1(v m2)"},
      {&v, Pat::Middle, C::Rp, C::M, "(r'v)m=r'(vm)"},
      {&v, Pat::Middle, C::Rp, C::R, "(r'v)r=r'(vr)"},
  };
  for (const auto& id : ids) {
    bool ok = true, vac = link.corner_dim(id.x) == 0 || link.corner_dim(id.y) == 0;
    std::string wit;
    for (std::size_t i = 0; i < link.corner_dim(id.x) && ok; ++i)
      for (std::size_t j = 0; j < link.corner_dim(id.y) && ok; ++j) {
        Vec x = link.corner_basis(id.x, i), y = link.corner_basis(id.y, j);
        Vec lhs, rhs;
        switch (id.pat) {
          case Pat::LeftOut:
            lhs = id.m->apply_left(alg.multiply(x, y));
            rhs = alg.multiply(id.m->apply_left(x), y);
            break;
          case Pat::RightOut:
            lhs = id.m->apply_right(alg.multiply(x, y));
            rhs = alg.multiply(x, id.m->apply_right(y));
            break;
          case Pat::Middle:
            lhs = alg.multiply(id.m->apply_right(x), y);
            rhs = alg.multiply(x, id.m->apply_left(y));
            break;
        }
        if (lhs != rhs)
          wit = "i=" + std::to_string(i) + " j=" + std::to_string(j), ok = false;
      }
    add(id.name, ok, wit, vac);
  }
  return rep;
}

/// The map r' -> u r' v from D_{g^-1} to D_g induced by a corner pair;
/// returned as a matrix from R'-corner coordinates to R-corner coordinates.
inline Matrix corner_iso(const LinkingAlgebra& link, const Multiplier& u,
                         const Multiplier& v) {
  using C = LinkingAlgebra::Corner;
  const Field& f = link.field();
  Matrix m(f, link.corner_dim(C::Rp), link.corner_dim(C::R));
  for (std::size_t i = 0; i < link.corner_dim(C::Rp); ++i) {
    Vec img = v.apply_right(u.apply_left(link.corner_basis(C::Rp, i)));
    if (!link.in_corner(C::R, img))
      throw XpaError("InternalInconsistency", "u r' v escaped the R corner");
    for (std::size_t k = 0; k < link.corner_dim(C::R); ++k)
      m.at(i, k) = img[link.corner_offset(C::R) + k];
  }
  return m;
}

/// Checks that r' -> u r' v is an algebra isomorphism (multiplicative and
/// bijective); returns the witness pair on failure.
inline CheckResult check_corner_iso(const LinkingAlgebra& link, const Multiplier& u,
                                    const Multiplier& v) {
  using C = LinkingAlgebra::Corner;
  const StructureAlgebra& alg = link.algebra();
  Matrix m = corner_iso(link, u, v);
  if (link.corner_dim(C::Rp) != link.corner_dim(C::R) || (m.rows() && !inverse(m)))
    return {"corner_iso", false, false, "u(.)v is not bijective"};
  auto apply = [&](const Vec& x) { return v.apply_right(u.apply_left(x)); };
  for (std::size_t i = 0; i < link.corner_dim(C::Rp); ++i)
    for (std::size_t j = 0; j < link.corner_dim(C::Rp); ++j) {
      Vec a = link.corner_basis(C::Rp, i), b = link.corner_basis(C::Rp, j);
      if (apply(alg.multiply(a, b)) != alg.multiply(apply(a), apply(b)))
        return {"corner_iso", false, false,
                "i=" + std::to_string(i) + " j=" + std::to_string(j)};
    }
  return {"corner_iso", true, false, ""};
}

}  // namespace xpa
