#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace sfglm {

using Exponent = std::uint32_t;

/// Exponent vector (u_1, ..., u_n) of the monomial x1^u_1 ... xn^u_n.
class Term {
 public:
  Term() = default;
  explicit Term(std::size_t nvars) : exps_(nvars, 0) {}
  Term(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Term(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Term one(std::size_t nvars) { return Term(nvars); }
  /// x_{var+1}^power, with var zero-based.
  static Term variable(std::size_t nvars, std::size_t var, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// this | other, componentwise.
  bool divides(const Term& other) const;
  Term operator*(const Term& other) const;
  /// Requires divides(other) reversed: *this must be divisible by `other`.
  Term operator/(const Term& other) const;
  Term lcm(const Term& other) const;
  /// Index of the single variable if this is a pure power x_i^k (k >= 1).
  int pure_power_var() const noexcept;

  bool operator==(const Term&) const = default;

  /// Readable form such as x1^2*x3, or 1.
  std::string to_string() const;
  /// Tuple form such as (2,0,1), used in traces.
  std::string to_tuple() const;

 private:
  std::vector<Exponent> exps_;
};

enum class Ordering { DRL, LEX };

const char* to_string(Ordering ord) noexcept;

/// Total order with x1 < x2 < ... < xn.
///
/// DRL: total degree first; ties go to the term with the smaller exponent
/// at the first differing position counted from x1.
/// LEX: the first differing exponent counted from xn decides.
/// Throws StructuralError when the lengths differ.
std::strong_ordering term_compare(const Term& a, const Term& b, Ordering ord);

struct TermLess {
  Ordering ord;
  bool operator()(const Term& a, const Term& b) const { return term_compare(a, b, ord) < 0; }
};

struct TermGreater {
  Ordering ord;
  bool operator()(const Term& a, const Term& b) const { return term_compare(a, b, ord) > 0; }
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Exponent e : t.exponents()) h = (h ^ e) * 0x100000001b3ull + (h >> 7);
    return h;
  }
};

}  // namespace sfglm
