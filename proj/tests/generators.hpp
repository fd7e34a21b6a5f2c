#pragma once

// Shared fixtures and oracles for the test suites.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "xpa/action.hpp"
#include "xpa/graded.hpp"

namespace gen {

using namespace xpa;

inline Vec unit(const Field& f, std::size_t n, std::size_t k) {
  Vec v = zero_vec(f, n);
  v[k] = f.one();
  return v;
}

// M_2(k): basis e11, e22, e12, e21.
inline std::shared_ptr<StructureAlgebra> m2_algebra(const Field& f) {
  std::vector<std::vector<Vec>> c(4, std::vector<Vec>(4, zero_vec(f, 4)));
  auto u = [&](int k) { return unit(f, 4, k); };
  c[0][0] = u(0); c[0][2] = u(2);
  c[1][1] = u(1); c[1][3] = u(3);
  c[2][1] = u(2); c[2][3] = u(0);
  c[3][0] = u(3); c[3][2] = u(1);
  return std::make_shared<StructureAlgebra>(
      StructureAlgebra::make(f, {"e11", "e22", "e12", "e21"}, c));
}

// The Z/2 grading of M_2(k): diagonal / antidiagonal.
inline GradedAlgebra m2_grading(const Field& f) {
  auto alg = m2_algebra(f);
  FiniteGroup g2 = cyclic_group(2);
  std::vector<SubspaceBasis> comps{
      SubspaceBasis::span(f, {unit(f, 4, 0), unit(f, 4, 1)}, 4),
      SubspaceBasis::span(f, {unit(f, 4, 2), unit(f, 4, 3)}, 4)};
  return GradedAlgebra::make(g2, alg, comps);
}

// k[x]/(x^2) with deg(1) = 0, deg(x) = 1: fails condition (i) and
// non-degeneracy in degree 1.
inline GradedAlgebra kx2_grading(const Field& f) {
  std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, zero_vec(f, 2)));
  c[0][0] = unit(f, 2, 0);
  c[0][1] = unit(f, 2, 1);
  c[1][0] = unit(f, 2, 1);
  auto alg = std::make_shared<StructureAlgebra>(StructureAlgebra::make(f, {"one", "x"}, c));
  return GradedAlgebra::make(cyclic_group(2), alg,
                             {SubspaceBasis::span(f, {unit(f, 2, 0)}, 2),
                              SubspaceBasis::span(f, {unit(f, 2, 1)}, 2)});
}

// Brute-force oracle: sign tables sigma: V4 x V4 -> {+1,-1} that are
// normalized 2-cocycles realizing the quaternion relations
// (delta_a)^2 = -1 and delta_a delta_b = -delta_b delta_a for distinct
// non-identity a, b. All 2^9 normalized tables are tried.
inline std::optional<std::vector<std::vector<int>>> quaternion_cocycle() {
  FiniteGroup v4 = klein_four_group();
  std::size_t n = 4, e = v4.identity();
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (g != e && h != e) free_slots.emplace_back(g, h);
  for (unsigned mask = 0; mask < (1u << free_slots.size()); ++mask) {
    std::vector<std::vector<int>> s(n, std::vector<int>(n, 1));
    for (std::size_t k = 0; k < free_slots.size(); ++k)
      if (mask & (1u << k)) s[free_slots[k].first][free_slots[k].second] = -1;
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      for (std::size_t h = 0; h < n && ok; ++h)
        for (std::size_t t = 0; t < n && ok; ++t)
          if (s[g][h] * s[v4.mul(g, h)][t] != s[h][t] * s[g][v4.mul(h, t)]) ok = false;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (a == e) continue;
      if (s[a][a] != -1) ok = false;
      for (std::size_t b = 0; b < n && ok; ++b)
        if (b != e && b != a && s[a][b] != -s[b][a]) ok = false;
    }
    if (ok) return s;
  }
  return std::nullopt;
}

// The twisted group algebra of V4 with the given sign table, as a twisted
// partial (here: global) action on the one-dimensional algebra k.
inline TwistedPartialAction quaternion_action(const Field& f,
                                              const std::vector<std::vector<int>>& s) {
  FiniteGroup v4 = klein_four_group();
  std::vector<std::vector<Vec>> c(1, std::vector<Vec>(1, Vec{f.one()}));
  auto alg = std::make_shared<StructureAlgebra>(StructureAlgebra::make(f, {"e"}, c));
  std::vector<SubspaceBasis> domains(4, alg->full_space());
  std::vector<Matrix> isos(4, Matrix::identity(f, 1));
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Matrix, Matrix>> twists;
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) {
      Matrix m(f, 1, 1);
      m.at(0, 0) = s[g][h] == 1 ? f.one() : f.neg(f.one());
      twists[{g, h}] = {m, m};
    }
  return TwistedPartialAction::make(v4, alg, domains, isos, twists);
}

// The 3-dimensional partial example: A = k x k, G = Z/2, D_g = k e1,
// theta_g = id, trivial twist. The crossed product is k x k x k.
inline TwistedPartialAction three_dim_partial(const Field& f) {
  std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, zero_vec(f, 2)));
  c[0][0] = unit(f, 2, 0);
  c[1][1] = unit(f, 2, 1);
  auto alg = std::make_shared<StructureAlgebra>(StructureAlgebra::make(f, {"e1", "e2"}, c));
  std::vector<SubspaceBasis> domains{alg->full_space(),
                                     SubspaceBasis::span(f, {unit(f, 2, 0)}, 2)};
  std::vector<Matrix> isos{Matrix::identity(f, 2), Matrix::identity(f, 1)};
  return TwistedPartialAction::make(cyclic_group(2), alg, domains, isos);
}

// Random verified twisted partial actions over F_5: the group acts on
// X = G x {0,1} by left translation; Y is a random nonempty subset of X with
// |Y| <= 6; A = functions on Y; D_g = span{e_y : y in Y and g^-1 y in Y};
// theta_g is translation; twists are partial coboundaries of random
// eps_g: Y -> F_5^* with eps_1 = 1.
inline TwistedPartialAction random_f5_action(std::mt19937_64& rng) {
  Field f = Field::prime(5);
  std::vector<FiniteGroup> groups{cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                  klein_four_group()};
  const FiniteGroup& gr = groups[rng() % groups.size()];
  std::size_t ng = gr.order();
  // Points of X are (g, copy); pick Y.
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t cpy = 0; cpy < 2; ++cpy) pts.emplace_back(g, cpy);
  std::vector<std::pair<std::size_t, std::size_t>> y;
  while (y.empty()) {
    y.clear();
    for (const auto& p : pts)
      if (y.size() < 6 && rng() % 2) y.push_back(p);
  }
  std::size_t dim = y.size();
  auto index_of = [&](std::size_t g, std::size_t cpy) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < dim; ++i)
      if (y[i] == std::make_pair(g, cpy)) return i;
    return std::nullopt;
  };
  std::vector<std::vector<Vec>> c(dim, std::vector<Vec>(dim, zero_vec(f, dim)));
  for (std::size_t i = 0; i < dim; ++i) c[i][i] = unit(f, dim, i);
  auto alg = std::make_shared<StructureAlgebra>(StructureAlgebra::make(
      f,
      [&] {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < dim; ++i) names.push_back("p" + std::to_string(i));
        return names;
      }(),
      c));
  // D_g = span{ e_y : y in Y, g^-1 y in Y }.
  std::vector<SubspaceBasis> domains;
  for (std::size_t g = 0; g < ng; ++g) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim; ++i)
      if (index_of(gr.mul(gr.inv(g), y[i].first), y[i].second)) rows.push_back(unit(f, dim, i));
    domains.push_back(SubspaceBasis::span(f, rows, dim));
  }
  // theta_g: e_y -> e_{g y} on D_{g^-1}.
  std::vector<Matrix> isos;
  for (std::size_t g = 0; g < ng; ++g) {
    std::size_t gi = gr.inv(g);
    Matrix th(f, domains[gi].dim(), domains[g].dim());
    for (std::size_t r = 0; r < domains[gi].dim(); ++r) {
      Vec bv = domains[gi].basis_vector(r);
      std::size_t i = 0;
      while (bv[i] == 0) ++i;
      auto j = index_of(gr.mul(g, y[i].first), y[i].second);
      Vec img = unit(f, dim, *j);
      th.set_row(r, *domains[g].coords(img));
    }
    isos.push_back(std::move(th));
  }
  // eps_g(y) in F_5^*, eps_1 = 1; w_{g,h}(y) = eps_g(y) eps_h(g^-1 y) / eps_{gh}(y).
  std::vector<std::vector<Fel>> eps(ng, std::vector<Fel>(dim, f.one()));
  for (std::size_t g = 0; g < ng; ++g)
    if (g != gr.identity())
      for (std::size_t i = 0; i < dim; ++i) eps[g][i] = f.from_long(1 + (long)(rng() % 4));
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Matrix, Matrix>> twists;
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h) {
      std::size_t gh = gr.mul(g, h);
      SubspaceBasis carrier = alg->subspace_product(domains[g], domains[gh]);
      Matrix m(f, carrier.dim(), carrier.dim());
      for (std::size_t r = 0; r < carrier.dim(); ++r) {
        Vec bv = carrier.basis_vector(r);
        std::size_t i = 0;
        while (bv[i] == 0) ++i;
        auto pre = index_of(gr.mul(gr.inv(g), y[i].first), y[i].second);
        Fel val = f.mul(eps[g][i], f.div(eps[h][*pre], eps[gh][i]));
        m.at(r, r) = val;
      }
      twists[{g, h}] = {m, m};
    }
  return TwistedPartialAction::make(gr, alg, domains, isos, twists);
}

}  // namespace gen
