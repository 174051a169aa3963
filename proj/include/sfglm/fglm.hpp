#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfglm/multipoly.hpp"
#include "sfglm/quotient.hpp"

namespace sfglm {

struct FglmStats {
  std::size_t terms_processed = 0;
  std::size_t matrix_products = 0;
};

/// Reduced Groebner basis of the ideal of Q under `target`, by linear algebra
/// on the normal forms of terms taken in ascending target order.
GroebnerBasis classic_fglm(const QuotientRing& Q, Ordering target, FglmStats* stats = nullptr);

enum class Method { ShapeProb, ShapeDet, Bms, Fglm };
enum class OfWhat { Ideal, Radical };

/// shape-prob, shape-det, bms, fglm
const char* to_string(Method m) noexcept;
/// I or radical(I)
const char* to_string(OfWhat w) noexcept;

struct ToplevelOptions {
  std::uint64_t seed = 0;
  /// Accept the radical basis from the deterministic stage.
  bool want_radical_ok = true;
  /// Fixed probe for the probabilistic stages instead of seeded draws.
  std::optional<CoordVector> probe;
  /// Number of probes tried by the probabilistic shape stage.
  std::size_t shape_attempts = 3;
};

struct RunReport {
  Method method_used = Method::Fglm;
  OfWhat of_what = OfWhat::Ideal;
  std::size_t D = 0;
  std::size_t nnz = 0;            // over the multiplication matrices built
  double density = 0;             // nnz / (matrices built * D^2)
  std::size_t passes = 0;         // BMS passes, 0 when BMS did not run
  double wall_time = 0;           // seconds
  std::uint64_t seed = 0;
  std::size_t basis_size = 0;     // polynomials in the output
  std::size_t max_terms = 0;      // largest polynomial in the output
  std::vector<std::string> stages;  // every stage tried, in order, with its outcome
  GroebnerBasis basis;
};

/// Fills the matrix and basis statistics of `r` from Q and r.basis.
void fill_statistics(RunReport& r, const QuotientRing& Q);

/// Cascade shape-prob, shape-det, bms, fglm on a shared quotient ring.
RunReport toplevel(const QuotientRing& Q, const ToplevelOptions& opts = {});
RunReport toplevel(const GroebnerBasis& G1, const ToplevelOptions& opts = {});

}  // namespace sfglm
