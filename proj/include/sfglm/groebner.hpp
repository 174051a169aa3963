#pragma once

#include <cstdint>
#include <vector>

#include "sfglm/multipoly.hpp"

namespace sfglm {

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t product_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced Groebner basis of <F> under `ord`.
GroebnerBasis buchberger(const std::vector<MultiPoly>& F, Ordering ord, BuchbergerStats* stats = nullptr);

/// n polynomials in x1..xn, every monomial of degree <= d present with a
/// uniform coefficient; the degree-d part uses nonzero coefficients.
std::vector<MultiPoly> gen_random_system(std::size_t n, std::size_t d, std::uint32_t p, std::uint64_t seed,
                                         Ordering ord = Ordering::DRL);

/// All exponent vectors in n variables of total degree <= d.
std::vector<Term> monomials_up_to(std::size_t n, std::size_t d);

}  // namespace sfglm
