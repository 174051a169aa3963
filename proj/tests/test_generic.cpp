#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "sfglm/generic.hpp"
#include "sfglm/groebner.hpp"

using namespace sfglm;

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("hilbert profile examples") {
  auto h = hilbert_profile(2, 2);
  CHECK(h.coeffs == std::vector<BigInt>{1, 2, 1});
  CHECK(h.m0 == 2);
  CHECK(h.ideal_degree == 4);
  CHECK(hilbert_profile(3, 3).coeffs == std::vector<BigInt>{1, 3, 6, 7, 6, 3, 1});
  CHECK(dense_column_count(3, 3) == 7);
  CHECK(dense_column_count(1, 9) == 1);
  CHECK(hilbert_profile(1, 5).coeffs == std::vector<BigInt>(5, 1));
}

TEST_CASE("hilbert profiles are symmetric and sum to d^n") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t d = 1; d <= 12; ++d) {
      auto h = hilbert_profile(n, d);
      CHECK(h.coeffs.size() == (d - 1) * n + 1);
      BigInt sum = 0;
      for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
        sum += h.coeffs[i];
        CHECK(h.coeffs[i] == h.coeffs[h.coeffs.size() - 1 - i]);
      }
      CHECK(sum == h.ideal_degree);
    }
}

TEST_CASE("d = 2 gives central binomial coefficients") {
  for (std::size_t n = 1; n <= 20; ++n) CHECK(dense_column_count(n, 2) == binomial(n, (n + 1) / 2));
  CHECK(dense_column_count(40, 12) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("density bound") {
  CHECK(density_bound(2, 2) == BigRational(3, 4));
  CHECK(density_bound(3, 3) == BigRational(8, 27));
  CHECK(density_bound(1, 7) == BigRational(2, 7));
}

TEST_CASE("asymptotic estimate") {
  CHECK(asymptotic_estimate(1, 10) == doctest::Approx(std::sqrt(6 / M_PI)));
  CHECK(asymptotic_estimate(3, 100) == doctest::Approx(std::sqrt(2 / M_PI) * 1e4));
  CHECK(asymptotic_ratio(4, 100) == doctest::Approx(asymptotic_estimate(4, 100) / dense_column_count(4, 100).convert_to<double>()));
}

TEST_CASE("dense columns of generic systems") {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      QuotientRing Q(buchberger(gen_random_system(n, d, 65521, seed), Ordering::DRL));
      auto r = verify_moreno_socias(Q, n, d);
      CHECK(r.measured == r.predicted);
      CHECK(r.reduced_columns == 0);
      CHECK(r.match);
      CHECK(r.x1_leading_terms == r.measured);
    }
  }
  QuotientRing cube(fixtures::drl_basis(fixtures::kMonomialCube));
  auto r = verify_moreno_socias(cube, 2, 2);
  CHECK(r.predicted == 2);
  CHECK(r.measured == 3);
  CHECK(!r.match);
}
