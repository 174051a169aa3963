#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfglm/field.hpp"
#include "sfglm/multipoly.hpp"

namespace sfglm {

/// Dense univariate polynomial in x1, lowest degree first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector and has no degree.
class UniPoly {
 public:
  explicit UniPoly(PrimeField field) : field_(field) {}
  UniPoly(PrimeField field, std::vector<Elem> coeffs);

  static UniPoly constant(PrimeField field, Elem c);
  /// x - a
  static UniPoly linear_root(PrimeField field, Elem a);
  static UniPoly x_power(PrimeField field, std::size_t k);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Degree of a polynomial known to be nonzero.
  std::size_t deg() const;
  Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Elem leading_coeff() const noexcept { return c_.empty() ? 0 : c_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly scaled(Elem c) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const noexcept { return field_ == o.field_ && c_ == o.c_; }

  Elem eval(Elem x) const noexcept;

  /// Lifted to x1 in n variables.
  MultiPoly to_multi(std::size_t nvars, Ordering ord) const;
  /// Requires every term of f to be a power of x1.
  static UniPoly from_multi(const MultiPoly& f);

  std::string to_string(const std::string& var = "x1") const;

 private:
  void trim() noexcept;

  PrimeField field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws StructuralError on a zero divisor.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& m);
UniPoly uni_rem(const UniPoly& f, const UniPoly& m);
/// Exact division; throws InternalError if the remainder is nonzero.
UniPoly uni_exact_div(const UniPoly& f, const UniPoly& m);
/// Monic gcd; throws StructuralError when both inputs are zero.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);
/// Inverse of a modulo m; throws StructuralError when gcd(a, m) != 1.
UniPoly uni_inverse_mod(const UniPoly& a, const UniPoly& m);

/// Product of the distinct monic irreducible factors of f.
///
/// Yun-style: f / gcd(f, f') when every multiplicity is below p; factors
/// whose multiplicity is divisible by p survive in gcd(f, f') as a p-th power,
/// whose root is taken by dividing exponents by p.
UniPoly squarefree_part(const UniPoly& f);

/// Unique f with deg f < sum deg m_i and f = r_i mod m_i.
/// Throws StructuralError naming the first non-coprime pair of moduli.
UniPoly uni_crt(std::span<const UniPoly> residues, std::span<const UniPoly> moduli);

}  // namespace sfglm
