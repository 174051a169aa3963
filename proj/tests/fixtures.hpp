#pragma once

#include <random>
#include <string>
#include <vector>

#include "sfglm/io.hpp"
#include "sfglm/multipoly.hpp"

namespace fixtures {

inline constexpr const char* kGf11 =
    "p 11\nvars 3\n"
    "x2^2 + 9*x2 + 2*x1 + 6\n"
    "x1^2 + 2*x2 + 9\n"
    "x3 + 9\n";

inline constexpr const char* kGf2 =
    "p 2\nvars 2\n"
    "x2*x1^3 + x1^3 + x1 + 1\n"
    "x1^4 + x1^3 + x2 + 1\n"
    "x1^2 + x2^2\n";

// Reduced DRL basis of <g1, g2> over GF(65521), where
// g1 = x1^4 + 15*x1^2 + 19*x1 + 3 and g2 = x2^3 + 7*x1^2*x2^2 + 15*x1^2*x2 + 2*x1^3 + 9.
inline constexpr const char* kGf65521 =
    "p 65521\nvars 2\n"
    "x2^4 + 2*x1^3*x2 + 9253*x2^3 + 931*x1*x2^2 + 9328*x1^2*x2 + 18716*x1^3 + 147*x2^2"
    " + 1995*x1*x2 + 203*x1^2 + 324*x2 + 42*x1 + 17756\n"
    "x1^2*x2^2 + 56161*x2^3 + 56163*x1^2*x2 + 46801*x1^3 + 46802\n"
    "x1^4 + 15*x1^2 + 19*x1 + 3\n";

// The DRL basis of <g1, g2> over GF(23), read over GF(65521) instead, where it
// generates the unit ideal.
inline constexpr const char* kGf65521Mod23 =
    "p 65521\nvars 2\n"
    "x2^4 + 2*x1^3*x2 + 21*x2^3 + 11*x1*x2^2 + 4*x1^2*x2 + 22*x1^3 + 9*x2^2 + 17*x1*x2 + 19*x1^2"
    " + 2*x2 + 19*x1 + 5\n"
    "x1^2*x2^2 + 10*x2^3 + 12*x1^2*x2 + 20*x1^3 + 21\n"
    "x1^4 + 15*x1^2 + 19*x1 + 3\n";

inline constexpr const char* kMonomialCube =
    "p 65521\nvars 2\n"
    "x1^3\nx1^2*x2\nx1*x2^2\nx2^3\n";

inline const std::vector<sfglm::Elem> kGf65521Probe = {6757,  43420, 39830, 45356, 52762, 17712,
                                                       27676, 17194, 138,   48036, 12649, 11037};

inline sfglm::GroebnerBasis drl_basis(const char* text) {
  auto sys = sfglm::parse_system(text);
  return sfglm::GroebnerBasis::make_reduced(sys.polys, sfglm::Ordering::DRL);
}

inline sfglm::MultiPoly poly(const char* text, std::uint32_t p, std::size_t n,
                             sfglm::Ordering ord = sfglm::Ordering::LEX) {
  return sfglm::parse_poly(text, sfglm::PrimeField(p), n, ord);
}

inline std::vector<sfglm::Elem> random_vector(const sfglm::PrimeField& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<sfglm::Elem> dist(0, F.modulus() - 1);
  std::vector<sfglm::Elem> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace fixtures
