#include <random>

#include "doctest.h"
#include "sfglm/errors.hpp"
#include "sfglm/linrec.hpp"

using namespace sfglm;

TEST_CASE("Berlekamp-Massey on the GF(11) sequence") {
  const PrimeField F(11);
  std::vector<Elem> s{8, 4, 0, 7, 6, 8, 10, 10};
  CHECK(berlekamp_massey(F, s) == UniPoly(F, {9, 8, 0, 0, 1}));
}

TEST_CASE("Berlekamp-Massey trivial cases") {
  const PrimeField F(65521);
  std::vector<Elem> zeros(10, 0);
  CHECK(berlekamp_massey(F, zeros).is_one());
  std::vector<Elem> geo{1};
  for (int i = 0; i < 9; ++i) geo.push_back(F.mul(geo.back(), 5));
  CHECK(berlekamp_massey(F, geo) == UniPoly::linear_root(F, 5));
  // leading zeros need a long recurrence
  std::vector<Elem> spike{0, 0, 0, 1, 0, 0, 0, 0};
  CHECK(berlekamp_massey(F, spike) == UniPoly::x_power(F, 4));
}

TEST_CASE("Hankel solves") {
  const PrimeField F11(11);
  HankelSystem a{4, {8, 4, 0, 7, 6, 8, 10, 10}, {8, 6, 8, 3}};
  CHECK(hankel_solve(F11, a) == std::vector<Elem>{1, 0, 5, 0});

  const PrimeField F2(2);
  HankelSystem b{4, {1, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 1}};
  REQUIRE(hankel_matrix(b.seq, 4, 4) ==
          std::vector<std::vector<Elem>>{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}});
  CHECK(hankel_solve(F2, b) == std::vector<Elem>{0, 1, 0, 0});

  HankelSystem c{1, {4}, {8}};
  CHECK(hankel_solve(F11, c) == std::vector<Elem>{2});

  HankelSystem singular{2, {1, 1, 1}, {1, 2}};
  CHECK_THROWS_WITH_AS(hankel_solve(F11, singular), "singular Hankel system", StructuralError);
}

TEST_CASE("rank check") {
  const PrimeField F(11);
  std::vector<Elem> s{8, 4, 0, 7, 6, 8, 10, 10};
  CHECK(minimal_poly_degree_rank_check(F, s, 4));
  CHECK_FALSE(minimal_poly_degree_rank_check(F, s, 0));
  CHECK_FALSE(minimal_poly_degree_rank_check(F, s, 3));
  std::vector<Elem> geo{1, 3, 9, 5, 4, 1};
  CHECK(minimal_poly_degree_rank_check(F, geo, 1));
  CHECK_THROWS_AS(minimal_poly_degree_rank_check(F, geo, 4), StructuralError);
}

TEST_CASE("recurrences are recovered and the Hankel structure holds") {
  const PrimeField F(65521);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Elem> coef(0, F.modulus() - 1);
  std::uniform_int_distribution<std::size_t> degd(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = degd(rng);
    std::vector<Elem> m(d + 1);
    for (auto& x : m) x = coef(rng);
    m[d] = 1;
    std::vector<Elem> s;
    for (std::size_t i = 0; i < d; ++i) s.push_back(coef(rng));
    while (s.size() < 2 * d + 2) {
      std::size_t k = s.size() - d;
      Elem next = 0;
      for (std::size_t i = 0; i < d; ++i) next = F.sub(next, F.mul(m[i], s[k + i]));
      s.push_back(next);
    }
    UniPoly g = berlekamp_massey(F, s);
    if (g.deg() < d) continue;  // unlucky initial values; the generator is a proper factor
    CHECK(g == UniPoly(F, m));
    CHECK(matrix_rank(F, hankel_matrix(s, d, d)) == d);
    auto ker = kernel_basis(F, hankel_matrix(s, d + 1, d + 1));
    REQUIRE(ker.size() == 1);
    Elem scale = ker[0][d];
    REQUIRE(scale != 0);
    for (auto& x : ker[0]) x = F.div(x, scale);
    CHECK(ker[0] == m);
  }
}
