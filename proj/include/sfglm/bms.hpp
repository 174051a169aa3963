#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sfglm/multipoly.hpp"
#include "sfglm/quotient.hpp"

namespace sfglm {

/// E(u) = <r, T_1^u1 ... T_n^un e>, with the vectors T^u e cached.
class ArrayE {
 public:
  ArrayE(const QuotientRing& Q, CoordVector probe);

  Elem value(const Term& u);
  const CoordVector& vector(const Term& u);
  const CoordVector& probe() const noexcept { return r_; }
  std::size_t cached_vectors() const noexcept { return vecs_.size(); }
  std::size_t matrix_products() const noexcept { return products_; }

 private:
  const QuotientRing& Q_;
  CoordVector r_;
  std::unordered_map<Term, CoordVector, TermHash> vecs_;
  std::unordered_map<Term, Elem, TermHash> vals_;
  std::size_t products_ = 0;
};

/// Failed polynomial kept to repair later candidates.
struct Witness {
  MultiPoly poly;
  Term span;   // fail - lt(poly), an element of the delta set
  Term fail;
  Elem discrepancy;
};

struct BmsState {
  std::vector<MultiPoly> F;  // LEX, monic, ascending leading terms
  std::vector<Witness> G;
  std::vector<Term> delta;   // ascending LEX, downward closed
  std::optional<Term> u;     // last processed term
};

/// Initial state: F = [1], nothing processed.
BmsState bms_initial(const PrimeField& F, std::size_t nvars);

/// One update: make F valid up to `next_u`.
void sakata_update(BmsState& st, const Term& next_u, ArrayE& E);

/// Each f reduced by its surviving predecessors, zeros dropped, then every
/// tail reduced by the others. Leading coefficients are made 1.
std::vector<MultiPoly> reduce_set(const std::vector<MultiPoly>& F);

/// F lies in I and its leading terms leave exactly D standard monomials.
bool is_gb(const std::vector<MultiPoly>& F, const QuotientRing& Q);

/// Number of terms outside the monomial ideal generated by `lts`, or
/// nullopt when that number exceeds `cap`.
std::optional<std::size_t> staircase_size(const std::vector<Term>& lts, std::size_t nvars, std::size_t cap);

struct BmsOptions {
  std::uint64_t seed = 0;
  std::optional<CoordVector> probe;
  /// Keep a copy of F and the delta set after every pass.
  bool record_history = false;
};

struct BmsPass {
  Term u;
  std::vector<MultiPoly> F;
  std::vector<Term> delta;
};

struct BmsResult {
  std::optional<GroebnerBasis> basis;  // empty on Fail
  std::size_t passes = 0;
  std::size_t pass_cap = 0;
  std::vector<std::string> trace;      // "term | |F| | |delta|" per pass
  std::vector<BmsPass> history;
  std::vector<MultiPoly> final_F;
  std::vector<Term> final_delta;
  std::size_t matrix_products = 0;
  CoordVector probe;
};

BmsResult bms_change(const QuotientRing& Q, const BmsOptions& opts = {});

}  // namespace sfglm
