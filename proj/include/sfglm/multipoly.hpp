#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfglm/field.hpp"
#include "sfglm/term.hpp"

namespace sfglm {

/// Sparse polynomial over GF(p) in x1..xn.
///
/// Terms are stored strictly decreasing under the polynomial's ordering, so
/// the leading term is the first entry. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Entry = std::pair<Term, Elem>;

  MultiPoly(PrimeField field, std::size_t nvars, Ordering ord)
      : field_(field), nvars_(nvars), ord_(ord) {}

  /// Builds from an unordered list; duplicate terms are summed.
  static MultiPoly from_terms(PrimeField field, std::size_t nvars, Ordering ord,
                              std::vector<Entry> entries);
  static MultiPoly constant(PrimeField field, std::size_t nvars, Ordering ord, Elem c);
  static MultiPoly monomial(PrimeField field, Ordering ord, Term t, Elem c = 1);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  Ordering ordering() const noexcept { return ord_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Entry>& terms() const noexcept { return terms_; }

  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  Elem leading_coeff() const;
  Elem coeff(const Term& t) const;

  MultiPoly with_ordering(Ordering ord) const;
  MultiPoly monic() const;
  MultiPoly scaled(Elem c) const;
  MultiPoly mul_term(const Term& t, Elem c) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  /// this - c * t * o, in one merge.
  MultiPoly sub_mul(Elem c, const Term& t, const MultiPoly& o) const;

  bool operator==(const MultiPoly& o) const;

  /// e.g. "x2 + 6*x1^2 + 10"; coefficients printed in [0, p).
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  PrimeField field_;
  std::size_t nvars_;
  Ordering ord_;
  std::vector<Entry> terms_;
};

/// Full reduction of f by G under `ord`.
///
/// Among the reducers whose leading term divides the current term, the one
/// with the smallest leading term is used, so the result does not depend on
/// the order of G. The result is expressed in `ord`.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> G, Ordering ord);

/// Polynomial list with the ordering it is a Groebner basis for.
struct GroebnerBasis {
  std::vector<MultiPoly> polys;
  Ordering ordering = Ordering::DRL;
  bool reduced = false;

  std::size_t nvars() const { return polys.empty() ? 0 : polys.front().nvars(); }
  /// Monic, pairwise reduced, sorted by ascending leading term. Does not
  /// run Buchberger: the input must already generate its leading-term ideal.
  static GroebnerBasis make_reduced(std::vector<MultiPoly> polys, Ordering ord);

  bool operator==(const GroebnerBasis& o) const;
  std::string to_string() const;
};

std::vector<Term> leading_terms(std::span<const MultiPoly> polys);

}  // namespace sfglm
