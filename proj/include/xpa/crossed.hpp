#pragma once

// The crossed product A x_Theta G of a twisted partial action: basis vectors
// are a_i delta_g with a_i running over the canonical basis of D_g, and
//   (a delta_g)(b delta_h) = theta_g(theta_g^{-1}(a) b) w_{g,h} delta_{gh}.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "xpa/action.hpp"
#include "xpa/graded.hpp"

namespace xpa {

class CrossedProduct {
 public:
  /// Builds the crossed product of a verified action; associativity of the
  /// result is checked exhaustively over basis triples. Throws
  /// UnverifiedAction when verify_action rejects the input.
  static CrossedProduct build(TwistedPartialAction action) {
    VerificationReport rep = verify_action(action);
    if (!rep.passed()) {
      std::string bad;
      for (const auto& c : rep.checks)
        if (!c.pass) bad += (bad.empty() ? "" : ", ") + c.name;
      throw XpaError("UnverifiedAction", "action fails: " + bad);
    }
    CrossedProduct cp = assemble(std::move(action));
    if (auto w = cp.algebra_->associativity_witness())
      throw XpaError("AssociativityViolation", *w);
    return cp;
  }

  /// Builds without verifying the action or checking associativity; the
  /// escape hatch for exhibiting associativity failures of bad inputs.
  static CrossedProduct build_unchecked(TwistedPartialAction action) {
    return assemble(std::move(action));
  }

  const TwistedPartialAction& action() const { return *action_; }
  const StructureAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const StructureAlgebra> algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return algebra_->dim(); }

  /// (g, i): flat basis index k corresponds to the i-th basis vector of D_g.
  std::pair<std::size_t, std::size_t> component_of(std::size_t k) const {
    return component_map_[k];
  }
  std::size_t offset(std::size_t g) const { return offsets_[g]; }

  /// a delta_g for an ambient vector a in D_g.
  Vec embed(std::size_t g, const Vec& a) const {
    auto c = action_->domain(g).space().coords(a);
    if (!c) throw XpaError("MembershipError", "coefficient is not in D_g");
    Vec out = zero_vec(algebra_->field(), dim());
    for (std::size_t i = 0; i < c->size(); ++i) out[offsets_[g] + i] = (*c)[i];
    return out;
  }

  /// The delta_g coefficient of a crossed-product vector, as a vector of A.
  Vec project(std::size_t g, const Vec& x) const {
    Vec c(action_->domain(g).dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x[offsets_[g] + i];
    return action_->domain(g).space().from_coords(c);
  }

  /// The coordinate grading B_g = D_g delta_g, validated by GradedAlgebra.
  GradedAlgebra canonical_grading() const {
    const Field& f = algebra_->field();
    std::vector<SubspaceBasis> comps;
    for (std::size_t g = 0; g < action_->group().order(); ++g) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < action_->domain(g).dim(); ++i)
        rows.push_back(algebra_->basis_vector(offsets_[g] + i));
      comps.push_back(SubspaceBasis::span(f, rows, dim()));
    }
    return GradedAlgebra::make(action_->group(), algebra_, std::move(comps));
  }

 private:
  static CrossedProduct assemble(TwistedPartialAction action) {
    CrossedProduct cp;
    cp.action_ = std::make_shared<TwistedPartialAction>(std::move(action));
    const TwistedPartialAction& t = *cp.action_;
    const FiniteGroup& gr = t.group();
    const Field& f = t.ambient().field();
    std::size_t n = gr.order();
    cp.offsets_.assign(n + 1, 0);
    for (std::size_t g = 0; g < n; ++g)
      cp.offsets_[g + 1] = cp.offsets_[g] + t.domain(g).dim();
    std::size_t d = cp.offsets_[n];
    std::vector<std::string> names;
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t i = 0; i < t.domain(g).dim(); ++i) {
        names.push_back("d" + gr.name(g) + "_" + std::to_string(i));
        cp.component_map_.emplace_back(g, i);
      }
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, zero_vec(f, d)));
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        std::size_t gh = gr.mul(g, h);
        for (std::size_t i = 0; i < t.domain(g).dim(); ++i)
          for (std::size_t j = 0; j < t.domain(h).dim(); ++j) {
            Vec a = t.domain(g).space().basis_vector(i);
            Vec b = t.domain(h).space().basis_vector(j);
            Vec p = t.apply_twist(g, h, MultSide::Right,
                                  t.apply_theta(g, t.ambient().multiply(
                                                       t.apply_theta_inv(g, a), b)));
            auto coords = t.domain(gh).space().coords(p);
            if (!coords)
              throw XpaError("InternalInconsistency", "product escaped D_{gh}");
            Vec& out = c[cp.offsets_[g] + i][cp.offsets_[h] + j];
            for (std::size_t k = 0; k < coords->size(); ++k)
              out[cp.offsets_[gh] + k] = (*coords)[k];
          }
      }
    cp.algebra_ = std::make_shared<StructureAlgebra>(
        StructureAlgebra::make_unchecked(f, std::move(names), std::move(c)));
    return cp;
  }

  std::shared_ptr<const TwistedPartialAction> action_;
  std::shared_ptr<const StructureAlgebra> algebra_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<std::size_t, std::size_t>> component_map_;
};

/// The explicit corner pair for a crossed product, acting on the linking
/// algebra of its canonical grading at g:
///   x u_g = (0, a delta_g; 0, c w_{g^-1,g} delta_1),
///   u_g x = (theta_g(c) w_{g,g^-1} delta_1, theta_g(d) delta_g; 0, 0),
///   x v_g = (b delta_1, 0; d w^{-1}_{g^-1,g} delta_{g^-1}, 0),
///   v_g x = (0, 0; theta_g^{-1}(a w^{-1}_{g,g^-1}) delta_{g^-1}, theta_g^{-1}(b) delta_1)
/// for x = (a delta_1, b delta_g; c delta_{g^-1}, d delta_1). The returned
/// pair is validated as multipliers at construction.
inline CornerMultiplierPair build_uv_for_crossed(const CrossedProduct& cp,
                                                 const LinkingAlgebra& link,
                                                 std::size_t g) {
  using C = LinkingAlgebra::Corner;
  const TwistedPartialAction& t = cp.action();
  const FiniteGroup& gr = t.group();
  std::size_t gi = gr.inv(g);
  std::size_t e = gr.identity();
  const Field& f = link.field();
  std::size_t d = link.dim();
  auto winv_gig = t.twist_inverse(gi, g);
  auto winv_ggi = t.twist_inverse(g, gi);
  if (!winv_gig || !winv_ggi)
    throw XpaError("UnverifiedAction", "corner pair needs invertible twists");

  // Coefficient of a corner basis element, as a vector of A. R and R' carry
  // delta_1 coefficients; M and M' carry delta_g and delta_{g^-1} ones.
  auto coeff = [&](C c, std::size_t i) {
    std::size_t comp = (c == C::M) ? g : (c == C::Mp) ? gi : e;
    return cp.project(comp, link.project(c, link.corner_basis(c, i)));
  };
  auto put = [&](Matrix& m, std::size_t row, C dst, std::size_t comp, const Vec& a) {
    Vec cv = link.embed(dst, cp.embed(comp, a));
    for (std::size_t k = 0; k < d; ++k)
      if (cv[k] != 0) m.at(row, k) = cv[k];
  };

  Matrix ru(f, d, d), lu(f, d, d), rv(f, d, d), lv(f, d, d);
  for (std::size_t i = 0; i < link.corner_dim(C::R); ++i) {
    std::size_t row = link.corner_offset(C::R) + i;
    Vec a = coeff(C::R, i);
    put(ru, row, C::M, g, a);                                              // x u
    put(lv, row, C::Mp, gi,
        t.apply_theta_inv(g, winv_ggi->apply_right(a)));                   // v x
  }
  for (std::size_t i = 0; i < link.corner_dim(C::M); ++i) {
    std::size_t row = link.corner_offset(C::M) + i;
    Vec b = coeff(C::M, i);
    put(rv, row, C::R, e, b);                                              // x v
    put(lv, row, C::Rp, e, t.apply_theta_inv(g, b));                       // v x
  }
  for (std::size_t i = 0; i < link.corner_dim(C::Mp); ++i) {
    std::size_t row = link.corner_offset(C::Mp) + i;
    Vec c = coeff(C::Mp, i);
    put(ru, row, C::Rp, e, t.twist(gi, g).apply_right(c));                 // x u
    put(lu, row, C::R, e,
        t.twist(g, gi).apply_right(t.apply_theta(g, c)));                  // u x
  }
  for (std::size_t i = 0; i < link.corner_dim(C::Rp); ++i) {
    std::size_t row = link.corner_offset(C::Rp) + i;
    Vec dd = coeff(C::Rp, i);
    put(lu, row, C::M, g, t.apply_theta(g, dd));                           // u x
    put(rv, row, C::Mp, gi, winv_gig->apply_right(dd));                    // x v
  }
  return {Multiplier::make(link.full_ideal(), std::move(ru), std::move(lu)),
          Multiplier::make(link.full_ideal(), std::move(rv), std::move(lv))};
}

}  // namespace xpa
