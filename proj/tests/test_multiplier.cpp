#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "xpa/multiplier.hpp"

using namespace xpa;

namespace {
std::shared_ptr<const Ideal> kk_axis(const Field& f) {
  std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, zero_vec(f, 2)));
  c[0][0] = gen::unit(f, 2, 0);
  c[1][1] = gen::unit(f, 2, 1);
  auto kk = std::make_shared<StructureAlgebra>(StructureAlgebra::make(f, {"e1", "e2"}, c));
  return std::make_shared<Ideal>(kk, SubspaceBasis::span(f, {gen::unit(f, 2, 0)}, 2));
}
}  // namespace

TEST_CASE("element-induced multipliers and composition") {
  Field f = Field::rationals();
  auto ideal = kk_axis(f);
  Vec a{Fel(3), Fel(0)};  // 3 e1 acts on the axis k e1
  Multiplier m = Multiplier::from_element(ideal, a);
  CHECK(m.apply_right(gen::unit(f, 2, 0)) == Vec{Fel(3), Fel(0)});
  Multiplier id = Multiplier::identity(ideal);
  CHECK(mult_compose(m, id) == m);
  CHECK(mult_compose(id, m) == m);
  auto mi = mult_invert(m);
  REQUIRE(mi.has_value());
  CHECK(mult_compose(m, *mi) == id);
}

TEST_CASE("multiplier validation rejects incompatible pairs") {
  Field f = Field::rationals();
  auto ideal = kk_axis(f);
  Matrix r = Matrix::identity(f, 1), l(f, 1, 1);
  l.at(0, 0) = Fel(2);  // (aR)b = ab but a(Lb) = 2ab
  CHECK_THROWS_AS((void)Multiplier::make(ideal, r, l), XpaError);
}

TEST_CASE("multiplier space of a unital ideal is the ideal itself") {
  Field f = Field::rationals();
  auto ideal = kk_axis(f);
  Matrix space = multiplier_space(*ideal);
  // k e1 is unital, so M(k e1) = k e1 is one-dimensional.
  CHECK(space.rows() == 1);
  Multiplier m = Multiplier::from_element(ideal, Vec{Fel(3), Fel(0)});
  CHECK(check_commuting_property(*ideal, m, Multiplier::identity(ideal)));
}

TEST_CASE("multiplier space of a zero-product ideal is full") {
  Field f = Field::rationals();
  // A = k x with x^2 = 0: the ideal (x) has zero product, any (R, L) pair of
  // scalars works.
  std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, zero_vec(f, 2)));
  c[0][0] = gen::unit(f, 2, 0);
  c[0][1] = gen::unit(f, 2, 1);
  c[1][0] = gen::unit(f, 2, 1);
  auto alg = std::make_shared<StructureAlgebra>(StructureAlgebra::make(f, {"one", "x"}, c));
  auto ideal =
      std::make_shared<Ideal>(alg, SubspaceBasis::span(f, {gen::unit(f, 2, 1)}, 2));
  Matrix space = multiplier_space(*ideal);
  CHECK(space.rows() == 2);  // independent R and L scalars
}
