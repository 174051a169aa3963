#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sfglm/field.hpp"
#include "sfglm/multipoly.hpp"
#include "sfglm/term.hpp"

namespace sfglm {

using CoordVector = std::vector<Elem>;

/// How column i of T_j arose from the product eps_i * x_j.
enum class ColumnKind : std::uint8_t {
  Unit,         // product is a basis term
  LeadingTerm,  // product is the leading term of a basis polynomial
  Reduced,      // product needed a full normal form
};

/// Square sparse matrix over GF(p), stored by columns.
class SparseMat {
 public:
  struct Entry {
    std::uint32_t row;
    Elem value;
  };
  using Column = std::vector<Entry>;

  SparseMat() = default;
  /// Columns must have strictly increasing rows and nonzero values.
  SparseMat(PrimeField field, std::vector<Column> columns, std::vector<ColumnKind> kinds);

  std::size_t dim() const noexcept { return cols_.size(); }
  std::size_t nnz() const noexcept { return nnz_; }
  const PrimeField& field() const { return *field_; }
  const Column& column(std::size_t i) const { return cols_.at(i); }
  ColumnKind kind(std::size_t i) const { return kinds_.at(i); }
  bool is_dense_column(std::size_t i) const { return kinds_.at(i) != ColumnKind::Unit; }
  std::size_t count_kind(ColumnKind k) const noexcept;

  /// T * v
  CoordVector apply(const CoordVector& v) const;
  /// T^t * v
  CoordVector apply_transpose(const CoordVector& v) const;
  Elem at(std::size_t row, std::size_t col) const;

  /// Header `D n j nnz`, then `row col value` per nonzero ascending by
  /// (col, row). Indices are 0-based; j is the 1-based variable index.
  void dump(std::ostream& os, std::size_t nvars, std::size_t var) const;

 private:
  std::optional<PrimeField> field_;
  std::vector<Column> cols_;
  std::vector<ColumnKind> kinds_;
  std::size_t nnz_ = 0;
};

struct DensityStats {
  std::size_t nnz = 0;
  double percent_nonzero = 0.0;
  std::size_t dense_column_count = 0;
};

DensityStats density_stats(const SparseMat& T);

/// Canonical basis and multiplication matrices of K[x]/<G>.
///
/// Matrices are built on first request and kept; requests are serialized by
/// an internal mutex so a shared instance can be queried from several
/// threads. Only T_1 and the columns T_i*e are needed by the shape
/// algorithms, and `matrix_built` reports which matrices exist.
class QuotientRing {
 public:
  /// Throws StructuralError when <G> is not zero-dimensional or is the unit
  /// ideal. A basis not flagged as reduced is interreduced first.
  explicit QuotientRing(const GroebnerBasis& G);

  QuotientRing(const QuotientRing&) = delete;
  QuotientRing& operator=(const QuotientRing&) = delete;

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t degree() const noexcept { return basis_.size(); }
  Ordering ordering() const noexcept { return gb_.ordering; }
  const GroebnerBasis& source() const noexcept { return gb_; }
  const std::vector<Term>& basis() const noexcept { return basis_; }
  std::optional<std::size_t> index_of(const Term& t) const;

  /// T_{var+1}, var zero-based.
  const SparseMat& matrix(std::size_t var) const;
  bool matrix_built(std::size_t var) const;
  /// T_{var+1} * e, the coordinates of NF(x_{var+1}), without building T.
  CoordVector mult_e(std::size_t var) const;

  /// Coordinates of NF(f), evaluated term by term as products of the
  /// multiplication matrices applied to e.
  CoordVector nf_vector(const MultiPoly& f) const;
  /// Coordinates of NF(t) for one term, cached.
  CoordVector term_vector(const Term& t) const;
  /// Coordinates of a polynomial already supported on the basis.
  CoordVector coords(const MultiPoly& reduced) const;
  MultiPoly from_coords(const CoordVector& v) const;
  CoordVector unit(std::size_t k) const;

 private:
  CoordVector column_for(const Term& product, ColumnKind* kind) const;
  SparseMat build(std::size_t var) const;

  PrimeField field_;
  std::size_t nvars_;
  GroebnerBasis gb_;
  std::vector<Term> basis_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
  std::unordered_map<Term, std::size_t, TermHash> lead_;  // lt -> position in gb_

  mutable std::recursive_mutex mu_;
  mutable std::vector<std::unique_ptr<SparseMat>> mats_;
  mutable std::unordered_map<Term, CoordVector, TermHash> term_cache_;
};

}  // namespace sfglm
