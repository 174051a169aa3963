#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfglm/field.hpp"
#include "sfglm/multipoly.hpp"

namespace sfglm {

/// Contents of a system file:
///
///   p <modulus>
///   vars <n>
///   <polynomial>      one per line, e.g. 3*x1^2*x2 - x3 + 7
///
/// `#` starts a comment; blank lines are ignored.
struct PolySystem {
  PrimeField field;
  std::size_t nvars;
  std::vector<MultiPoly> polys;
};

/// Throws InputError with line/column on malformed text, a composite or
/// out-of-range modulus, a coefficient >= p, or an empty polynomial list.
PolySystem parse_system(std::string_view text, Ordering ord = Ordering::DRL);
MultiPoly parse_poly(std::string_view text, const PrimeField& field, std::size_t nvars,
                     Ordering ord = Ordering::DRL);

/// Inverse of parse_system.
std::string format_system(const PrimeField& field, std::size_t nvars, std::span<const MultiPoly> polys);

}  // namespace sfglm
