#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "sfglm/quotient.hpp"

namespace sfglm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficients of (1 + z + ... + z^(d-1))^n.
struct HilbertProfile {
  std::size_t n = 0, d = 0;
  std::vector<BigInt> coeffs;
  BigInt m0;             // greatest coefficient
  std::size_t k0 = 0;    // smallest index where it occurs
  BigInt ideal_degree;   // d^n
};

HilbertProfile hilbert_profile(std::size_t n, std::size_t d);
/// Predicted number of non-unit columns of T_1 for a generic system.
BigInt dense_column_count(std::size_t n, std::size_t d);
/// (m0 + 1) / d^n
BigRational density_bound(std::size_t n, std::size_t d);
/// sqrt(6 / (n pi)) * d^(n-1)
double asymptotic_estimate(std::size_t n, std::size_t d);
/// asymptotic_estimate / m0
double asymptotic_ratio(std::size_t n, std::size_t d);

struct MorenoSociasCheck {
  std::size_t predicted = 0;
  std::size_t measured = 0;         // non-unit columns of T_1
  std::size_t x1_leading_terms = 0; // elements of G1 whose leading term x1 divides
  std::size_t reduced_columns = 0;  // columns that needed a full normal form
  bool match = false;
};

/// Builds T_1 and compares its dense columns with the generic prediction.
MorenoSociasCheck verify_moreno_socias(const QuotientRing& Q, std::size_t n, std::size_t d);

}  // namespace sfglm
