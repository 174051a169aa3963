#include "sfglm/term.hpp"

#include <algorithm>
#include <numeric>

#include "sfglm/errors.hpp"

namespace sfglm {

Term Term::variable(std::size_t nvars, std::size_t var, Exponent power) {
  Term t(nvars);
  t.exps_.at(var) = power;
  return t;
}

std::uint64_t Term::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Term::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Term::divides(const Term& other) const {
  if (nvars() != other.nvars()) throw StructuralError("term length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Term Term::operator*(const Term& other) const {
  if (nvars() != other.nvars()) throw StructuralError("term length mismatch");
  Term r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Term Term::operator/(const Term& other) const {
  if (!other.divides(*this)) throw StructuralError("term division is not exact");
  Term r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Term Term::lcm(const Term& other) const {
  if (nvars() != other.nvars()) throw StructuralError("term length mismatch");
  Term r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  return r;
}

int Term::pure_power_var() const noexcept {
  int var = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var >= 0) return -1;
    var = static_cast<int>(i);
  }
  return var;
}

std::string Term::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Term::to_tuple() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

const char* to_string(Ordering ord) noexcept { return ord == Ordering::DRL ? "drl" : "lex"; }

std::strong_ordering term_compare(const Term& a, const Term& b, Ordering ord) {
  const std::size_t n = a.nvars();
  if (n != b.nvars()) throw StructuralError("term_compare: length mismatch");
  if (ord == Ordering::DRL) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace sfglm
