#include "sfglm/field.hpp"

#include <string>

namespace sfglm {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; the witness set is exact for all 64-bit n.
bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw StructuralError("modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw StructuralError("modulus " + std::to_string(p) + " is not prime");
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw StructuralError("inverse of zero");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

Elem PrimeField::dot(std::span<const Elem> a, std::span<const Elem> b) const {
  if (a.size() != b.size()) throw StructuralError("dot: length mismatch");
  // Accumulate up to 4 products (each < 2^62) before reducing.
  std::uint64_t acc = 0;
  const std::uint64_t p = p_;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
    if ((i & 3) == 3) acc %= p;
  }
  return static_cast<Elem>(acc % p);
}

}  // namespace sfglm
