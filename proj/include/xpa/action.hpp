#pragma once

// Twisted partial actions: the triple ({D_g}, {theta_g}, {w_{g,h}}) together
// with the exhaustive verifier for the six defining postulates and the suite
// of derived identities that any verified action must satisfy.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xpa/group.hpp"
#include "xpa/multiplier.hpp"

namespace xpa {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool vacuous = false;
  std::string witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

enum class MultSide { Right, Left };

class TwistedPartialAction {
 public:
  /// Assembles the triple. Twist entries default to the identity multiplier of
  /// the carrier D_g * D_{gh}; supplying a multiplier on any other ideal is a
  /// structural error. Postulates are checked by verify_action, not here.
  static TwistedPartialAction make(
      FiniteGroup group, std::shared_ptr<const StructureAlgebra> ambient,
      std::vector<SubspaceBasis> domains, std::vector<Matrix> isos,
      std::map<std::pair<std::size_t, std::size_t>, std::pair<Matrix, Matrix>> twists = {}) {
    TwistedPartialAction t;
    t.group_ = std::move(group);
    t.ambient_ = std::move(ambient);
    std::size_t n = t.group_.order();
    if (domains.size() != n || isos.size() != n)
      throw XpaError("ShapeMismatch", "need one domain and one iso per group element");
    for (std::size_t g = 0; g < n; ++g)
      t.domains_.push_back(std::make_shared<Ideal>(t.ambient_, domains[g]));
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t dsrc = t.domains_[t.group_.inv(g)]->dim();
      std::size_t ddst = t.domains_[g]->dim();
      if (isos[g].rows() != dsrc || isos[g].cols() != ddst)
        throw XpaError("ShapeMismatch",
                       "theta_" + t.group_.name(g) + " must be dim(D_{g^-1}) x dim(D_g)");
      t.isos_.push_back(isos[g]);
      auto inv = inverse(isos[g]);
      t.iso_inverses_.push_back(inv ? *inv : Matrix());
    }
    for (std::size_t g = 0; g < n; ++g) {
      t.twists_.emplace_back();
      for (std::size_t h = 0; h < n; ++h) {
        auto carrier = std::make_shared<Ideal>(
            t.ambient_, t.ambient_->subspace_product(t.domains_[g]->space(),
                                                     t.domains_[t.group_.mul(g, h)]->space()));
        auto it = twists.find({g, h});
        if (it == twists.end()) {
          t.twists_[g].push_back(Multiplier::identity(carrier));
        } else {
          t.twists_[g].push_back(Multiplier::make(carrier, it->second.first, it->second.second));
        }
      }
    }
    return t;
  }

  const FiniteGroup& group() const { return group_; }
  const StructureAlgebra& ambient() const { return *ambient_; }
  std::shared_ptr<const StructureAlgebra> ambient_ptr() const { return ambient_; }
  const Ideal& domain(std::size_t g) const { return *domains_[g]; }
  std::shared_ptr<const Ideal> domain_ptr(std::size_t g) const { return domains_[g]; }
  const Matrix& iso(std::size_t g) const { return isos_[g]; }
  const Multiplier& twist(std::size_t g, std::size_t h) const { return twists_[g][h]; }

  /// D_g * D_h as a subspace.
  SubspaceBasis domain_product(std::size_t g, std::size_t h) const {
    return ambient_->subspace_product(domains_[g]->space(), domains_[h]->space());
  }

  bool theta_invertible(std::size_t g) const { return iso_inverses_[g].rows() > 0 || domains_[g]->dim() == 0; }

  /// theta_g(a) for an ambient vector a in D_{g^-1} (membership checked).
  Vec apply_theta(std::size_t g, const Vec& a) const {
    auto c = domains_[group_.inv(g)]->space().coords(a);
    if (!c) throw XpaError("MembershipError", "argument of theta_g is not in D_{g^-1}");
    return domains_[g]->space().from_coords(vec_apply(ambient_->field(), *c, isos_[g]));
  }

  /// theta_g^{-1}(a) for a in D_g — the inverse map of theta_g.
  Vec apply_theta_inv(std::size_t g, const Vec& a) const {
    if (!theta_invertible(g))
      throw XpaError("MembershipError", "theta_g is not invertible");
    auto c = domains_[g]->space().coords(a);
    if (!c) throw XpaError("MembershipError", "argument of theta_g^{-1} is not in D_g");
    return domains_[group_.inv(g)]->space().from_coords(
        vec_apply(ambient_->field(), *c, iso_inverses_[g]));
  }

  /// x * w_{g,h} (Right) or w_{g,h} * x (Left), ambient coordinates.
  Vec apply_twist(std::size_t g, std::size_t h, MultSide side, const Vec& x) const {
    const Multiplier& w = twists_[g][h];
    return side == MultSide::Right ? w.apply_right(x) : w.apply_left(x);
  }

  std::optional<Multiplier> twist_inverse(std::size_t g, std::size_t h) const {
    return mult_invert(twists_[g][h]);
  }

 private:
  FiniteGroup group_;
  std::shared_ptr<const StructureAlgebra> ambient_;
  std::vector<std::shared_ptr<const Ideal>> domains_;
  std::vector<Matrix> isos_;
  std::vector<Matrix> iso_inverses_;  // empty matrix when not invertible
  std::vector<std::vector<Multiplier>> twists_;
};

namespace detail {

inline std::string gname(const FiniteGroup& gr, std::size_t g) { return gr.name(g); }

}  // namespace detail

/// Exhaustive check of postulates (i)-(vi) plus the isomorphism requirements.
/// All identities are verified on basis elements, which suffices by
/// multilinearity. Vacuous checks (zero carriers) are flagged.
inline VerificationReport verify_action(const TwistedPartialAction& t) {
  VerificationReport rep;
  const FiniteGroup& gr = t.group();
  const StructureAlgebra& amb = t.ambient();
  const Field& f = amb.field();
  std::size_t n = gr.order();
  std::size_t e = gr.identity();
  auto add = [&](std::string name, bool pass, std::string witness = "", bool vacuous = false) {
    rep.checks.push_back({std::move(name), pass, vacuous, std::move(witness)});
  };

  // Cached pairwise products D_g * D_h.
  std::vector<std::vector<SubspaceBasis>> prod(n, std::vector<SubspaceBasis>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) prod[g][h] = t.domain_product(g, h);

  // theta_g is an algebra isomorphism D_{g^-1} -> D_g.
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t gi = gr.inv(g);
    bool square = t.domain(gi).dim() == t.domain(g).dim();
    bool invertible = square && t.theta_invertible(g);
    if (!invertible) {
      add("theta_iso[" + gr.name(g) + "]", false, "theta_" + gr.name(g) + " is not bijective");
      continue;
    }
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < t.domain(gi).dim() && ok; ++i)
      for (std::size_t j = 0; j < t.domain(gi).dim() && ok; ++j) {
        Vec a = t.domain(gi).space().basis_vector(i);
        Vec b = t.domain(gi).space().basis_vector(j);
        Vec lhs = t.apply_theta(g, amb.multiply(a, b));
        Vec rhs = amb.multiply(t.apply_theta(g, a), t.apply_theta(g, b));
        if (lhs != rhs) {
          ok = false;
          wit = "a=" + vec_to_string(f, a) + " b=" + vec_to_string(f, b);
        }
      }
    add("theta_iso[" + gr.name(g) + "]", ok, wit);
  }

  // (i) D_g^2 = D_g and D_g D_h = D_h D_g.
  for (std::size_t g = 0; g < n; ++g)
    add("(i).idempotent[" + gr.name(g) + "]", prod[g][g] == t.domain(g).space());
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = g + 1; h < n; ++h)
      add("(i).commute[" + gr.name(g) + "," + gr.name(h) + "]", prod[g][h] == prod[h][g]);

  // (ii) D_1 = A and theta_1 = id.
  add("(ii).domain", t.domain(e).space() == amb.full_space());
  add("(ii).theta", t.iso(e) == Matrix::identity(f, t.domain(e).dim()));

  // (iii) theta_g(D_{g^-1} D_h) = D_g D_{gh}.
  for (std::size_t g = 0; g < n; ++g) {
    if (!t.theta_invertible(g)) continue;  // already reported
    std::size_t gi = gr.inv(g);
    for (std::size_t h = 0; h < n; ++h) {
      const SubspaceBasis& src = prod[gi][h];
      std::vector<Vec> image;
      bool member_ok = true;
      for (std::size_t i = 0; i < src.dim(); ++i) {
        if (!t.domain(gi).space().contains(src.basis_vector(i))) { member_ok = false; break; }
        image.push_back(t.apply_theta(g, src.basis_vector(i)));
      }
      bool ok = member_ok &&
                SubspaceBasis::span(f, image, amb.dim()) == prod[g][gr.mul(g, h)];
      add("(iii)[" + gr.name(g) + "," + gr.name(h) + "]", ok);
    }
  }

  // Twist invertibility.
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      bool vac = t.twist(g, h).dim() == 0;
      add("twist_invertible[" + gr.name(g) + "," + gr.name(h) + "]",
          vac || t.twist_inverse(g, h).has_value(), "", vac);
    }

  // (iv) theta_g(theta_h(a)) = w_{g,h} theta_{gh}(a) w_{g,h}^{-1}
  //      on a basis of D_{h^-1} D_{h^-1 g^-1}; both bracketings of the right
  //      hand side are computed and must agree.
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t gh = gr.mul(g, h);
      if (!t.theta_invertible(g) || !t.theta_invertible(h) || !t.theta_invertible(gh)) continue;
      auto winv = t.twist_inverse(g, h);
      SubspaceBasis dom = prod[gr.inv(h)][gr.inv(gh)];
      std::string name = "(iv)[" + gr.name(g) + "," + gr.name(h) + "]";
      if (dom.dim() == 0) { add(name, true, "", true); continue; }
      if (!winv) { add(name, false, "w_{g,h} not invertible"); continue; }
      bool ok = true;
      std::string wit;
      for (std::size_t i = 0; i < dom.dim() && ok; ++i) {
        Vec a = dom.basis_vector(i);
        Vec lhs, rhs1, rhs2;
        try {
          lhs = t.apply_theta(g, t.apply_theta(h, a));
          Vec mid = t.apply_theta(gh, a);
          rhs1 = winv->apply_right(t.twist(g, h).apply_left(mid));
          rhs2 = t.twist(g, h).apply_left(winv->apply_right(mid));
        } catch (const XpaError& err) {
          ok = false;
          wit = std::string("membership failure: ") + err.what();
          break;
        }
        if (rhs1 != rhs2) {
          ok = false;
          wit = "bracketing mismatch at a=" + vec_to_string(f, a);
        } else if (lhs != rhs1) {
          ok = false;
          wit = "a=" + vec_to_string(f, a);
        }
      }
      add(name, ok, wit);
    }

  // (v) w_{1,g} = w_{g,1} = identity multiplier.
  for (std::size_t g = 0; g < n; ++g) {
    add("(v)[1," + gr.name(g) + "]", t.twist(e, g).is_identity());
    add("(v)[" + gr.name(g) + ",1]", t.twist(g, e).is_identity());
  }

  // (vi) theta_g(a w_{h,t}) w_{g,ht} = theta_g(a) w_{g,h} w_{gh,t}
  //      on a basis of D_{g^-1} D_h D_{ht}.
  for (std::size_t g = 0; g < n; ++g) {
    if (!t.theta_invertible(g)) continue;
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t tt = 0; tt < n; ++tt) {
        std::size_t ht = gr.mul(h, tt), gh = gr.mul(g, h), ght = gr.mul(g, ht);
        SubspaceBasis dom =
            amb.subspace_product(t.domain(gr.inv(g)).space(), prod[h][ht]);
        std::string name =
            "(vi)[" + gr.name(g) + "," + gr.name(h) + "," + gr.name(tt) + "]";
        if (dom.dim() == 0) { add(name, true, "", true); continue; }
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < dom.dim() && ok; ++i) {
          Vec a = dom.basis_vector(i);
          Vec lhs, rhs;
          try {
            lhs = t.twist(g, ht).apply_right(
                t.apply_theta(g, t.twist(h, tt).apply_right(a)));
            rhs = t.twist(gh, tt).apply_right(
                t.twist(g, h).apply_right(t.apply_theta(g, a)));
            (void)ght;
          } catch (const XpaError& err) {
            ok = false;
            wit = "witness (" + gr.name(g) + "," + gr.name(h) + "," + gr.name(tt) +
                  ", a=" + vec_to_string(f, a) + "): " + err.what();
            break;
          }
          if (lhs != rhs) {
            ok = false;
            wit = "(" + gr.name(g) + "," + gr.name(h) + "," + gr.name(tt) +
                  ", a=" + vec_to_string(f, a) + ")";
          }
        }
        add(name, ok, wit);
      }
  }

  return rep;
}

/// The nine derived identities of a verified action. They are theorems, so a
/// failure here is reported as InternalInconsistency (an implementation bug or
/// an unverified input).
inline VerificationReport check_derived_identities(const TwistedPartialAction& t) {
  VerificationReport rep;
  const FiniteGroup& gr = t.group();
  std::size_t n = gr.order();
  const Field& f = t.ambient().field();
  auto add = [&](std::string name, bool pass, std::string wit = "", bool vac = false) {
    rep.checks.push_back({std::move(name), pass,  vac,
                          pass ? std::move(wit) : "InternalInconsistency: " + wit});
  };

  for (std::size_t g = 0; g < n; ++g) {
    std::size_t gi = gr.inv(g);
    const Multiplier& w_g_gi = t.twist(g, gi);    // carrier D_g
    const Multiplier& w_gi_g = t.twist(gi, g);    // carrier D_{g^-1}
    auto w_g_gi_inv = mult_invert(w_g_gi);
    auto w_gi_g_inv = mult_invert(w_gi_g);
    if (!w_g_gi_inv || !w_gi_g_inv)
      throw XpaError("UnverifiedAction", "derived identities need invertible twists");
    const SubspaceBasis& dgi = t.domain(gi).space();
    const SubspaceBasis& dg = t.domain(g).space();
    bool vac_src = dgi.dim() == 0, vac_dst = dg.dim() == 0;

    auto run = [&](const std::string& label, bool from_dg, auto&& lhs_fn, auto&& rhs_fn) {
      const SubspaceBasis& dom = from_dg ? dg : dgi;
      bool vac = from_dg ? vac_dst : vac_src;
      std::string name = label + "[" + gr.name(g) + "]";
      if (vac) { add(name, true, "", true); return; }
      for (std::size_t i = 0; i < dom.dim(); ++i) {
        Vec a = dom.basis_vector(i);
        if (lhs_fn(a) != rhs_fn(a)) {
          add(name, false, "a=" + vec_to_string(f, a));
          return;
        }
      }
      add(name, true);
    };

    // (D1) theta_g(a w_{g^-1,g}) = theta_g(a) w_{g,g^-1}
    run("(D1)", false,
        [&](const Vec& a) { return t.apply_theta(g, w_gi_g.apply_right(a)); },
        [&](const Vec& a) { return w_g_gi.apply_right(t.apply_theta(g, a)); });
    // (D2) with inverse twists
    run("(D2)", false,
        [&](const Vec& a) { return t.apply_theta(g, w_gi_g_inv->apply_right(a)); },
        [&](const Vec& a) { return w_g_gi_inv->apply_right(t.apply_theta(g, a)); });
    // (D3) theta_g^{-1}(a w_{g,g^-1}) = theta_g^{-1}(a) w_{g^-1,g}
    run("(D3)", true,
        [&](const Vec& a) { return t.apply_theta_inv(g, w_g_gi.apply_right(a)); },
        [&](const Vec& a) { return w_gi_g.apply_right(t.apply_theta_inv(g, a)); });
    // (D4)
    run("(D4)", true,
        [&](const Vec& a) { return t.apply_theta_inv(g, w_g_gi_inv->apply_right(a)); },
        [&](const Vec& a) { return w_gi_g_inv->apply_right(t.apply_theta_inv(g, a)); });
    // (D5) theta_g(w_{g^-1,g} a) = w_{g,g^-1} theta_g(a)
    run("(D5)", false,
        [&](const Vec& a) { return t.apply_theta(g, w_gi_g.apply_left(a)); },
        [&](const Vec& a) { return w_g_gi.apply_left(t.apply_theta(g, a)); });
    // (D6)
    run("(D6)", false,
        [&](const Vec& a) { return t.apply_theta(g, w_gi_g_inv->apply_left(a)); },
        [&](const Vec& a) { return w_g_gi_inv->apply_left(t.apply_theta(g, a)); });
    // (D7) theta_g^{-1}(w_{g,g^-1} a) = w_{g^-1,g} theta_g^{-1}(a)
    run("(D7)", true,
        [&](const Vec& a) { return t.apply_theta_inv(g, w_g_gi.apply_left(a)); },
        [&](const Vec& a) { return w_gi_g.apply_left(t.apply_theta_inv(g, a)); });
    // (D8)
    run("(D8)", true,
        [&](const Vec& a) { return t.apply_theta_inv(g, w_g_gi_inv->apply_left(a)); },
        [&](const Vec& a) { return w_gi_g_inv->apply_left(t.apply_theta_inv(g, a)); });
    // (D9) theta_g^{-1}(a) = w^{-1}_{g^-1,g} theta_{g^-1}(a) w_{g^-1,g}
    run("(D9)", true,
        [&](const Vec& a) { return t.apply_theta_inv(g, a); },
        [&](const Vec& a) {
          return w_gi_g.apply_right(w_gi_g_inv->apply_left(t.apply_theta(gi, a)));
        });
  }
  return rep;
}

}  // namespace xpa
