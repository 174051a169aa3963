#include "sfglm/generic.hpp"

#include <cmath>
#include <numbers>

#include "sfglm/errors.hpp"

namespace sfglm {

HilbertProfile hilbert_profile(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw StructuralError("hilbert_profile needs n >= 1 and d >= 1");
  HilbertProfile h;
  h.n = n;
  h.d = d;
  h.coeffs = {1};
  for (std::size_t k = 0; k < n; ++k) {
    // Multiply by 1 + z + ... + z^(d-1) with a running window sum.
    std::vector<BigInt> next(h.coeffs.size() + d - 1);
    BigInt window = 0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (i < h.coeffs.size()) window += h.coeffs[i];
      if (i >= d) window -= h.coeffs[i - d];
      next[i] = window;
    }
    h.coeffs = std::move(next);
  }
  h.m0 = 0;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    if (h.coeffs[i] > h.m0) {
      h.m0 = h.coeffs[i];
      h.k0 = i;
    }
  h.ideal_degree = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(n));
  return h;
}

BigInt dense_column_count(std::size_t n, std::size_t d) { return hilbert_profile(n, d).m0; }

BigRational density_bound(std::size_t n, std::size_t d) {
  auto h = hilbert_profile(n, d);
  return BigRational(h.m0 + 1, h.ideal_degree);
}

double asymptotic_estimate(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw StructuralError("asymptotic_estimate needs n >= 1 and d >= 1");
  const double nn = static_cast<double>(n);
  return std::sqrt(6.0 / (nn * std::numbers::pi)) * std::pow(static_cast<double>(d), nn - 1.0);
}

double asymptotic_ratio(std::size_t n, std::size_t d) {
  return asymptotic_estimate(n, d) / dense_column_count(n, d).convert_to<double>();
}

MorenoSociasCheck verify_moreno_socias(const QuotientRing& Q, std::size_t n, std::size_t d) {
  if (Q.nvars() != n) throw StructuralError("verify_moreno_socias: variable count mismatch");
  MorenoSociasCheck r;
  r.predicted = dense_column_count(n, d).convert_to<std::size_t>();
  const SparseMat& T1 = Q.matrix(0);
  r.measured = T1.count_kind(ColumnKind::LeadingTerm) + T1.count_kind(ColumnKind::Reduced);
  r.reduced_columns = T1.count_kind(ColumnKind::Reduced);
  for (const auto& g : Q.source().polys)
    if (g.leading_term()[0] > 0) ++r.x1_leading_terms;
  r.match = r.measured == r.predicted && r.reduced_columns == 0;
  return r;
}

}  // namespace sfglm
