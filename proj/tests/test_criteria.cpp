#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "xpa/criteria.hpp"

using namespace xpa;

TEST_CASE("s-unitality") {
  Field f = Field::rationals();
  GradedAlgebra kx2 = gen::kx2_grading(f);
  auto alg = kx2.algebra_ptr();
  // The span of x is an ideal with zero product: not s-unital.
  Ideal xs(alg, kx2.component(1));
  CHECK(!check_s_unital(xs));
  // A unital ideal is s-unital.
  std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, zero_vec(f, 2)));
  c[0][0] = gen::unit(f, 2, 0);
  c[1][1] = gen::unit(f, 2, 1);
  auto kk = std::make_shared<StructureAlgebra>(StructureAlgebra::make(f, {"e1", "e2"}, c));
  CHECK(check_s_unital(Ideal(kk, SubspaceBasis::span(f, {gen::unit(f, 2, 0)}, 2))));
}

TEST_CASE("M2 grading: certificate with coordinate-swap theta") {
  Field f = Field::rationals();
  GradedAlgebra gb = gen::m2_grading(f);
  CriteriaResult res = check_criteria(gb, SolverConfig{});
  REQUIRE(res.outcome == CriteriaOutcome::Certificate);
  const TwistedPartialAction& t = *res.certificate->action;
  // A = B_1 = k x k, D_g = A, and theta_g swaps the two coordinates.
  CHECK(t.domain(1).dim() == 2);
  Matrix swap(f, 2, 2);
  swap.at(0, 1) = f.one();
  swap.at(1, 0) = f.one();
  CHECK(t.iso(1) == swap);
  // D_g is k x k: two orthogonal idempotent basis lines.
  const StructureAlgebra& a = t.ambient();
  CHECK(vec_is_zero(a.multiply(a.basis_vector(0), a.basis_vector(1))));
  CHECK(a.multiply(a.basis_vector(0), a.basis_vector(0)) == a.basis_vector(0));
}

TEST_CASE("both routes certify the M2 grading and agree on the verdict") {
  GradedAlgebra gb = gen::m2_grading(Field::rationals());
  for (auto route : {SolverConfig::Route::Psi, SolverConfig::Route::Uv}) {
    SolverConfig cfg;
    cfg.route = route;
    CriteriaResult res = check_criteria(gb, cfg);
    CHECK(res.outcome == CriteriaOutcome::Certificate);
  }
}

TEST_CASE("rejections name the failed necessary condition") {
  CriteriaResult res = check_criteria(gen::kx2_grading(Field::rationals()), SolverConfig{});
  CHECK(res.outcome == CriteriaOutcome::Rejected);
  CHECK(res.reason.find("condition_i") != std::string::npos);
}

TEST_CASE("crossed products round-trip through their canonical grading") {
  Field f = Field::rationals();
  auto s = gen::quaternion_cocycle();
  REQUIRE(s.has_value());
  for (const TwistedPartialAction& t :
       {gen::quaternion_action(f, *s), gen::three_dim_partial(f)}) {
    CrossedProduct cp = CrossedProduct::build(t);
    CriteriaResult res = check_criteria(cp.canonical_grading(), SolverConfig{});
    REQUIRE(res.outcome == CriteriaOutcome::Certificate);
  }
}

TEST_CASE("certificate soundness on random F5 crossed products") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 5; ++trial) {
    CrossedProduct cp = CrossedProduct::build(gen::random_f5_action(rng));
    CriteriaResult res = check_criteria(cp.canonical_grading(), SolverConfig{});
    INFO("trial ", trial, ": ", res.reason);
    CHECK(res.outcome == CriteriaOutcome::Certificate);
  }
}

TEST_CASE("matrix amplification preserves the criteria verdicts") {
  Field f = Field::rationals();
  GradedAlgebra gb = gen::m2_grading(f);
  GradedAlgebra amp = matrix_amplify(gb, 2);
  CHECK(amp.algebra().dim() == 16);
  CHECK(check_condition_i(amp).passed());
  CHECK(check_criteria(amp, SolverConfig{}).outcome == CriteriaOutcome::Certificate);
  GradedAlgebra bad = matrix_amplify(gen::kx2_grading(f), 2);
  CriteriaResult res = check_criteria(bad, SolverConfig{});
  CHECK(res.outcome == CriteriaOutcome::Rejected);
}

TEST_CASE("module iso pairs satisfy their contract on the M2 grading") {
  Field f = Field::rationals();
  GradedAlgebra gb = gen::m2_grading(f);
  PairSolveResult pr = solve_module_iso_pair(gb, 1, SolverConfig{});
  REQUIRE(pr.status == SolveStatus::Found);
  const ModuleIsoPair& p = *pr.pair;
  const StructureAlgebra& b = gb.algebra();
  SubspaceBasis dg = gb.dspace(1);
  const SubspaceBasis& bg = gb.component(1);
  // (d x) psi = d (x psi) on basis pairs of D_g.
  for (std::size_t i = 0; i < dg.dim(); ++i)
    for (std::size_t j = 0; j < dg.dim(); ++j) {
      Vec lhs = bg.from_coords(
          vec_apply(f, *dg.coords(b.multiply(dg.basis_vector(i), dg.basis_vector(j))), p.psi));
      Vec rhs = b.multiply(dg.basis_vector(i),
                           bg.from_coords(vec_apply(f, *dg.coords(dg.basis_vector(j)), p.psi)));
      CHECK(lhs == rhs);
    }
  CHECK(inverse(p.psi).has_value());
  CHECK(inverse(p.psi_prime).has_value());
}

TEST_CASE("corner pairs pass the full identity suite") {
  GradedAlgebra gb = gen::m2_grading(Field::rationals());
  LinkingAlgebra link(gb, 1);
  PairSolveResult pr = solve_module_iso_pair(gb, 1, SolverConfig{});
  REQUIRE(pr.status == SolveStatus::Found);
  CornerMultiplierPair uv = assemble_uv(gb, link, 1, *pr.pair);
  VerificationReport rep = check_uv_properties(link, uv.u, uv.v);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  CHECK(check_corner_iso(link, uv.u, uv.v).pass);
}

TEST_CASE("identical configurations give identical certificates") {
  GradedAlgebra gb = gen::m2_grading(Field::rationals());
  SolverConfig cfg;
  cfg.seed = 9;
  CriteriaResult r1 = check_criteria(gb, cfg);
  CriteriaResult r2 = check_criteria(gb, cfg);
  REQUIRE(r1.outcome == CriteriaOutcome::Certificate);
  REQUIRE(r2.outcome == CriteriaOutcome::Certificate);
  CHECK(r1.certificate->phi == r2.certificate->phi);
  for (std::size_t g = 0; g < 2; ++g)
    CHECK(r1.certificate->action->iso(g) == r2.certificate->action->iso(g));
}
