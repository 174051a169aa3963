#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sfglm/multipoly.hpp"
#include "sfglm/quotient.hpp"
#include "sfglm/unipoly.hpp"

namespace sfglm {

/// [f1, x2 - f2, ..., xn - fn] with f1 monic and deg f_i < deg f1.
struct ShapeBasis {
  UniPoly f1;
  std::vector<UniPoly> tails;  // tails[k] is f_{k+2}

  std::size_t nvars() const noexcept { return tails.size() + 1; }
  /// The reduced LEX Groebner basis in the usual ascending order.
  GroebnerBasis to_groebner() const;
  bool operator==(const ShapeBasis& o) const { return f1 == o.f1 && tails == o.tails; }
};

/// Uniform vector in GF(p)^D.
CoordVector random_probe(const PrimeField& F, std::size_t D, std::mt19937_64& rng);

struct ShapeProbOptions {
  std::uint64_t seed = 0;
  /// Used instead of a random draw when set.
  std::optional<CoordVector> probe;
};

struct ShapeProbResult {
  std::optional<ShapeBasis> basis;  // empty on Fail
  CoordVector probe;
  std::vector<Elem> sequence;       // <r, T1^i e>, i < 2D
  UniPoly minpoly;                  // BM of the sequence
  std::vector<std::vector<Elem>> hankel_solutions;  // one per variable x2..xn
};

/// Probabilistic shape-position conversion: Fail iff the minimal polynomial
/// of the projected sequence has degree below D.
ShapeProbResult shape_prob(const QuotientRing& Q, const ShapeProbOptions& opts);

struct ShapeDetOptions {
  /// Random probes instead of the unit vectors e_1, e_2, ...
  bool random_probes = false;
  std::uint64_t seed = 0;
};

/// Record of the deterministic Wiedemann loop.
struct WiedemannTrace {
  std::vector<UniPoly> factors;                  // f_{1,i}
  std::vector<std::vector<UniPoly>> tails;       // f_{j,i}, j = 2..n, reduced mod f_{1,i}
  std::vector<CoordVector> probes;               // probe used for each factor
  std::vector<std::vector<Elem>> sequences;      // sequence per factor
  std::vector<CoordVector> b_vectors;            // b after each update
};

struct ShapeDetResult {
  std::optional<ShapeBasis> basis;  // basis of the radical; empty on Fail
  bool is_radical = false;          // f1 squarefree, so basis generates I itself
  UniPoly f1;                       // product of the factors
  WiedemannTrace trace;
};

/// Deterministic shape-position conversion. Fail certifies that I is not
/// in shape position.
ShapeDetResult shape_det(const QuotientRing& Q, const ShapeDetOptions& opts = {});

/// [h, f_2 mod h, ..., f_n mod h] for a factor h of component.f1.
ShapeBasis split_shape_component(const ShapeBasis& component, const UniPoly& factor);
/// Chinese remaindering of components with pairwise coprime univariates.
ShapeBasis crt_combine(const std::vector<ShapeBasis>& components);

struct UnivariateResult {
  UniPoly poly;
  std::size_t steps = 0;
  std::size_t sequence_length = 0;
};

/// Grows [<r, T^i e>] two values per step until the minimal polynomial has
/// been stable for `window` consecutive steps or the length reaches 2*dim(T).
UnivariateResult incremental_minpoly(const SparseMat& T, const CoordVector& r, std::size_t window = 2);
UnivariateResult incremental_univariate(const QuotientRing& Q, std::uint64_t seed, std::size_t window = 2);

}  // namespace sfglm
