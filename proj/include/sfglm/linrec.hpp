#pragma once

#include <span>
#include <vector>

#include "sfglm/field.hpp"
#include "sfglm/unipoly.hpp"

namespace sfglm {

/// Monic minimal polynomial m of s: sum_i m_i s_{i+r} = 0 for every shift r
/// that fits. The all-zero sequence gives 1.
UniPoly berlekamp_massey(const PrimeField& F, std::span<const Elem> s);

/// H * c = rhs with H[j][k] = seq[j+k], H of size d x d.
struct HankelSystem {
  std::size_t d = 0;
  std::vector<Elem> seq;
  std::vector<Elem> rhs;
};

/// rows x cols matrix with entry (j, k) = s[j+k].
std::vector<std::vector<Elem>> hankel_matrix(std::span<const Elem> s, std::size_t rows, std::size_t cols);

/// Throws StructuralError("singular Hankel system") when H is singular.
std::vector<Elem> hankel_solve(const PrimeField& F, const HankelSystem& sys);

std::size_t matrix_rank(const PrimeField& F, std::vector<std::vector<Elem>> m);
/// Basis of the right kernel, one vector per free column.
std::vector<std::vector<Elem>> kernel_basis(const PrimeField& F, std::vector<std::vector<Elem>> m);

/// rank(H_d(s)) = d and the (|s|-d) x (d+1) Hankel matrix also has rank d,
/// so no recurrence of order d+1 sees anything that one of order d misses.
/// Throws StructuralError when |s| < 2d.
bool minimal_poly_degree_rank_check(const PrimeField& F, std::span<const Elem> s, std::size_t d);

}  // namespace sfglm
