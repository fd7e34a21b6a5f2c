#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xpa/subspace.hpp"

using namespace xpa;

TEST_CASE("rational field arithmetic is exact") {
  Field f = Field::rationals();
  Fel a = f.from_string("2/3"), b = f.from_string("-1/6");
  CHECK(f.to_string(f.add(a, b)) == "1/2");
  CHECK(f.to_string(f.mul(a, b)) == "-1/9");
  CHECK(f.to_string(f.inv(a)) == "3/2");
  CHECK(f.to_string(f.sub(a, a)) == "0");
}

TEST_CASE("prime field normalizes to canonical residues") {
  Field f = Field::prime(7);
  CHECK(f.to_string(f.from_long(-1)) == "6");
  CHECK(f.to_string(f.from_string("10")) == "3");
  CHECK(f.to_string(f.inv(f.from_long(3))) == "5");  // 3*5 = 15 = 1 mod 7
  CHECK_THROWS_AS((void)Field::prime(6), XpaError);
  CHECK_THROWS_AS((void)f.inv(f.zero()), XpaError);
}

TEST_CASE("rref, rank, inverse") {
  Field f = Field::rationals();
  Matrix m(f, 3, 3);
  long vals[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Fel(vals[i][j]);
  CHECK(rank(m) == 3);
  auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK(m * *mi == Matrix::identity(f, 3));
  Matrix sing(f, 2, 2);
  sing.at(0, 0) = Fel(1); sing.at(0, 1) = Fel(2);
  sing.at(1, 0) = Fel(2); sing.at(1, 1) = Fel(4);
  CHECK(rank(sing) == 1);
  CHECK(!inverse(sing).has_value());
}

TEST_CASE("solve and kernel agree") {
  Field f = Field::prime(5);
  Matrix a(f, 3, 2);
  a.at(0, 0) = Fel(1); a.at(0, 1) = Fel(2);
  a.at(1, 0) = Fel(3); a.at(1, 1) = Fel(2);
  a.at(2, 0) = Fel(4); a.at(2, 1) = Fel(4);  // row2 = row0 + row1
  Matrix k = kernel(a.transposed());  // rows c with c a = 0
  REQUIRE(k.rows() == 1);
  CHECK(vec_is_zero(vec_apply(f, k.row(0), a)));
  Matrix b(f, 3, 1);  // b = a (1,1)^T, so the system is consistent
  b.at(0, 0) = Fel(3); b.at(1, 0) = Fel(0); b.at(2, 0) = Fel(3);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
}

TEST_CASE("subspace coords and membership") {
  Field f = Field::rationals();
  SubspaceBasis s = SubspaceBasis::span(f, {{Fel(1), Fel(1), Fel(0)}, {Fel(0), Fel(2), Fel(2)}}, 3);
  CHECK(s.dim() == 2);
  Vec v{Fel(2), Fel(3), Fel(1)};  // 2*(1,1,0) + 1*(0,1,1)
  auto c = s.coords(v);
  REQUIRE(c.has_value());
  CHECK(s.from_coords(*c) == v);
  CHECK(!s.contains(Vec{Fel(0), Fel(0), Fel(1)}));
}

TEST_CASE("subspace lattice operations") {
  Field f = Field::rationals();
  auto e = [&](int k) { Vec v = zero_vec(f, 3); v[k] = f.one(); return v; };
  SubspaceBasis a = SubspaceBasis::span(f, {e(0), e(1)}, 3);
  SubspaceBasis b = SubspaceBasis::span(f, {e(1), e(2)}, 3);
  CHECK(a.sum(b).dim() == 3);
  SubspaceBasis i = a.intersect(b);
  CHECK(i.dim() == 1);
  CHECK(i.contains(e(1)));
  CHECK(a.contains_subspace(i));
}
