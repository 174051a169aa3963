#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sfglm/errors.hpp"

namespace sfglm {

/// Element of Z/pZ, always kept in [0, p).
using Elem = std::uint32_t;

/// Arithmetic in the prime field Z/pZ for p < 2^31.
///
/// Products are formed in 64-bit intermediates and reduced immediately, so
/// every value handed back to the caller is canonical.
class PrimeField {
 public:
  /// Throws StructuralError when p is not a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a + b*c
  Elem fma(Elem a, Elem b, Elem c) const noexcept {
    return static_cast<Elem>((static_cast<std::uint64_t>(b) * c + a) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Throws StructuralError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Canonical representative of an arbitrary signed integer.
  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }

  Elem dot(std::span<const Elem> a, std::span<const Elem> b) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace sfglm
