#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"

using namespace xpa;

TEST_CASE("quaternion cocycle oracle finds a valid table") {
  auto s = gen::quaternion_cocycle();
  REQUIRE(s.has_value());
  FiniteGroup v4 = klein_four_group();
  // Normalization and quaternion relations.
  for (std::size_t g = 0; g < 4; ++g) {
    CHECK((*s)[v4.identity()][g] == 1);
    CHECK((*s)[g][v4.identity()] == 1);
    if (g != v4.identity()) CHECK((*s)[g][g] == -1);
  }
}

TEST_CASE("quaternion action verifies all postulates") {
  auto s = gen::quaternion_cocycle();
  REQUIRE(s.has_value());
  TwistedPartialAction t = gen::quaternion_action(Field::rationals(), *s);
  VerificationReport rep = verify_action(t);
  for (const auto& c : rep.checks) {
    INFO(c.name, " ", c.witness);
    CHECK(c.pass);
  }
  VerificationReport ids = check_derived_identities(t);
  for (const auto& c : ids.checks) {
    INFO(c.name, " ", c.witness);
    CHECK(c.pass);
  }
}

TEST_CASE("corrupted cocycle fails at the cocycle postulate with a witness") {
  auto s = gen::quaternion_cocycle();
  REQUIRE(s.has_value());
  auto bad = *s;
  bad[1][2] = -bad[1][2];
  TwistedPartialAction t = gen::quaternion_action(Field::rationals(), bad);
  VerificationReport rep = verify_action(t);
  CHECK(!rep.passed());
  bool vi_failed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && c.name.rfind("(vi)", 0) == 0) {
      vi_failed = true;
      // Witness must name the (g,h,t,a) instance.
      CHECK(c.witness.find("a=") != std::string::npos);
    }
  CHECK(vi_failed);
}

TEST_CASE("three-dimensional partial example verifies") {
  TwistedPartialAction t = gen::three_dim_partial(Field::rationals());
  CHECK(verify_action(t).passed());
  CHECK(check_derived_identities(t).passed());
  CHECK(t.domain(1).dim() == 1);
}

TEST_CASE("random F5 actions verify, derived identities included") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    TwistedPartialAction t = gen::random_f5_action(rng);
    VerificationReport rep = verify_action(t);
    for (const auto& c : rep.checks) {
      INFO("trial ", trial, ": ", c.name, " ", c.witness);
      CHECK(c.pass);
    }
    CHECK(check_derived_identities(t).passed());
  }
}

TEST_CASE("theta application respects domains") {
  TwistedPartialAction t = gen::three_dim_partial(Field::rationals());
  Field f = Field::rationals();
  CHECK(t.apply_theta(1, gen::unit(f, 2, 0)) == gen::unit(f, 2, 0));
  CHECK_THROWS_AS((void)t.apply_theta(1, gen::unit(f, 2, 1)), XpaError);
}
