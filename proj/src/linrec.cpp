#include "sfglm/linrec.hpp"

#include <algorithm>

#include "sfglm/errors.hpp"

namespace sfglm {

UniPoly berlekamp_massey(const PrimeField& F, std::span<const Elem> s) {
  // Connection polynomial C with s_k + sum_{i>=1} C_i s_{k-i} = 0.
  std::vector<Elem> C{1}, B{1};
  std::size_t L = 0, m = 1;
  Elem b = 1;
  for (std::size_t k = 0; k < s.size(); ++k) {
    Elem d = s[k] % F.modulus();
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d = F.fma(d, C[i], s[k - i]);
    if (d == 0) {
      ++m;
      continue;
    }
    const Elem coef = F.div(d, b);
    std::vector<Elem> T = C;
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = F.sub(C[i + m], F.mul(coef, B[i]));
    if (2 * L <= k) {
      L = k + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, 0);
  std::vector<Elem> minpoly(L + 1);
  for (std::size_t i = 0; i <= L; ++i) minpoly[i] = C[L - i];
  return UniPoly(F, std::move(minpoly));
}

std::vector<std::vector<Elem>> hankel_matrix(std::span<const Elem> s, std::size_t rows, std::size_t cols) {
  if (rows && cols && rows + cols - 1 > s.size()) throw StructuralError("sequence too short for Hankel matrix");
  std::vector<std::vector<Elem>> h(rows, std::vector<Elem>(cols));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t k = 0; k < cols; ++k) h[j][k] = s[j + k];
  return h;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> echelon(const PrimeField& F, std::vector<std::vector<Elem>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Elem inv = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Elem f = F.neg(m[i][c]);
      for (std::size_t k = c; k < cols; ++k) m[i][k] = F.fma(m[i][k], f, m[r][k]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(const PrimeField& F, std::vector<std::vector<Elem>> m) { return echelon(F, m).size(); }

std::vector<std::vector<Elem>> kernel_basis(const PrimeField& F, std::vector<std::vector<Elem>> m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  auto pivots = echelon(F, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Elem> hankel_solve(const PrimeField& F, const HankelSystem& sys) {
  const std::size_t d = sys.d;
  if (sys.rhs.size() != d) throw StructuralError("hankel_solve: right-hand side has wrong length");
  auto aug = hankel_matrix(sys.seq, d, d);
  for (std::size_t j = 0; j < d; ++j) aug[j].push_back(sys.rhs[j] % F.modulus());
  auto pivots = echelon(F, aug);
  if (pivots.size() != d || (d && pivots.back() != d - 1)) throw StructuralError("singular Hankel system");
  std::vector<Elem> c(d);
  for (std::size_t j = 0; j < d; ++j) c[j] = aug[j][d];
  return c;
}

bool minimal_poly_degree_rank_check(const PrimeField& F, std::span<const Elem> s, std::size_t d) {
  if (s.size() < 2 * d) throw StructuralError("sequence shorter than twice the degree");
  if (d > 0 && matrix_rank(F, hankel_matrix(s, d, d)) != d) return false;
  if (s.size() <= d) return true;
  return matrix_rank(F, hankel_matrix(s, s.size() - d, d + 1)) == d;
}

}  // namespace sfglm
