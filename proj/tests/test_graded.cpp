#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"

using namespace xpa;

TEST_CASE("grading construction validates direct sum and containment") {
  Field f = Field::rationals();
  auto alg = gen::m2_algebra(f);
  FiniteGroup g2 = cyclic_group(2);
  // Overlapping components are rejected.
  CHECK_THROWS_AS((void)GradedAlgebra::make(
                      g2, alg,
                      {SubspaceBasis::span(f, {gen::unit(f, 4, 0), gen::unit(f, 4, 1)}, 4),
                       SubspaceBasis::span(f, {gen::unit(f, 4, 0), gen::unit(f, 4, 2)}, 4)}),
                  XpaError);
  // A direct sum that is not multiplicative is rejected: put e12 in degree 0.
  CHECK_THROWS_WITH_AS(
      (void)GradedAlgebra::make(
          g2, alg,
          {SubspaceBasis::span(f, {gen::unit(f, 4, 0), gen::unit(f, 4, 1), gen::unit(f, 4, 2)}, 4),
           SubspaceBasis::span(f, {gen::unit(f, 4, 3)}, 4)}),
      doctest::Contains("escapes"), XpaError);
}

TEST_CASE("condition (i) and non-degeneracy on the M2 grading") {
  GradedAlgebra gb = gen::m2_grading(Field::rationals());
  CHECK(check_condition_i(gb).passed());
  CHECK(check_homogeneous_nondegeneracy(gb).passed());
  CHECK(gb.dspace(1) == gb.component(0));  // B_g B_{g^-1} is the full diagonal
}

TEST_CASE("k[x]/(x^2) fails condition (i) and non-degeneracy") {
  GradedAlgebra gb = gen::kx2_grading(Field::rationals());
  VerificationReport ci = check_condition_i(gb);
  CHECK(!ci.passed());
  VerificationReport nd = check_homogeneous_nondegeneracy(gb);
  CHECK(!nd.passed());
  bool witnessed = false;
  for (const auto& c : nd.checks)
    if (!c.pass && !c.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("linking algebra corners and units") {
  Field f = Field::rationals();
  GradedAlgebra gb = gen::m2_grading(f);
  LinkingAlgebra link(gb, 1);
  CHECK(link.dim() == 8);
  for (auto c : {LinkingAlgebra::R, LinkingAlgebra::M, LinkingAlgebra::Mp, LinkingAlgebra::Rp})
    CHECK(link.corner_dim(c) == 2);
  Multiplier e1 = link.e11(), e2 = link.e22();
  CHECK(mult_compose(e1, e1) == e1);
  CHECK(mult_compose(e2, e2) == e2);
  // e11 + e22 = 1 in M(C): the right/left matrices sum to the identity.
  CHECK(e1.r_matrix() + e2.r_matrix() == Matrix::identity(f, 8));
  CHECK(e1.l_matrix() + e2.l_matrix() == Matrix::identity(f, 8));
  // e11 e22 = 0.
  CHECK(mult_compose(e1, e2).r_matrix().is_zero());
}

TEST_CASE("linking algebra embed/project round-trip") {
  Field f = Field::rationals();
  GradedAlgebra gb = gen::m2_grading(f);
  LinkingAlgebra link(gb, 1);
  Vec x = gen::unit(f, 4, 2);  // e12 lives in the M corner
  Vec emb = link.embed(LinkingAlgebra::M, x);
  CHECK(link.in_corner(LinkingAlgebra::M, emb));
  CHECK(link.project(LinkingAlgebra::M, emb) == x);
  CHECK_THROWS_AS((void)link.embed(LinkingAlgebra::R, x), XpaError);
}
