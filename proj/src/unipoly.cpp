#include "sfglm/unipoly.hpp"

#include <algorithm>

#include "sfglm/errors.hpp"

namespace sfglm {

UniPoly::UniPoly(PrimeField field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= field_.modulus();
  trim();
}

void UniPoly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(PrimeField field, Elem c) { return UniPoly(field, {c}); }

UniPoly UniPoly::linear_root(PrimeField field, Elem a) { return UniPoly(field, {field.neg(a % field.modulus()), 1}); }

UniPoly UniPoly::x_power(PrimeField field, std::size_t k) {
  std::vector<Elem> c(k + 1, 0);
  c[k] = 1;
  return UniPoly(field, std::move(c));
}

std::size_t UniPoly::deg() const {
  if (c_.empty()) throw StructuralError("degree of the zero polynomial");
  return c_.size() - 1;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

UniPoly UniPoly::scaled(Elem c) const {
  UniPoly r(field_);
  r.c_.reserve(c_.size());
  for (Elem a : c_) r.c_.push_back(field_.mul(a, c));
  r.trim();
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i))));
  r.trim();
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_.add((*this)[i], o[i]);
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_.sub((*this)[i], o[i]);
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly r(field_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = field_.fma(r.c_[i + j], c_[i], o.c_[j]);
  }
  r.trim();
  return r;
}

Elem UniPoly::eval(Elem x) const noexcept {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.fma(c_[i], acc, x);
  return acc;
}

MultiPoly UniPoly::to_multi(std::size_t nvars, Ordering ord) const {
  std::vector<MultiPoly::Entry> e;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) e.emplace_back(Term::variable(nvars, 0, static_cast<Exponent>(i)), c_[i]);
  return MultiPoly::from_terms(field_, nvars, ord, std::move(e));
}

UniPoly UniPoly::from_multi(const MultiPoly& f) {
  std::vector<Elem> c;
  for (const auto& [t, a] : f.terms()) {
    for (std::size_t i = 1; i < t.nvars(); ++i)
      if (t[i] != 0) throw StructuralError("polynomial is not univariate in x1");
    std::size_t k = t.nvars() ? t[0] : 0;
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] = a;
  }
  return UniPoly(f.field(), std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      s += std::to_string(c_[i]);
    else if (c_[i] == 1)
      s += mono;
    else
      s += std::to_string(c_[i]) + "*" + mono;
  }
  return s;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& m) {
  if (m.is_zero()) throw StructuralError("division by the zero polynomial");
  const PrimeField& F = f.field();
  std::vector<Elem> r = f.coeffs();
  const auto& mc = m.coeffs();
  const std::size_t dm = mc.size() - 1;
  if (r.size() <= dm) return {UniPoly(F), f};
  std::vector<Elem> q(r.size() - dm, 0);
  const Elem inv_lc = F.inv(mc.back());
  for (std::size_t i = r.size(); i-- > dm;) {
    Elem c = F.mul(r[i], inv_lc);
    q[i - dm] = c;
    if (c == 0) continue;
    Elem nc = F.neg(c);
    for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] = F.fma(r[i - dm + j], nc, mc[j]);
  }
  r.resize(dm);
  return {UniPoly(F, std::move(q)), UniPoly(F, std::move(r))};
}

UniPoly uni_rem(const UniPoly& f, const UniPoly& m) { return uni_divmod(f, m).second; }

UniPoly uni_exact_div(const UniPoly& f, const UniPoly& m) {
  auto [q, r] = uni_divmod(f, m);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw StructuralError("gcd of two zero polynomials");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = uni_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly uni_inverse_mod(const UniPoly& a, const UniPoly& m) {
  const PrimeField& F = a.field();
  UniPoly r0 = m, r1 = uni_rem(a, m);
  UniPoly t0(F), t1 = UniPoly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = uni_divmod(r0, r1);
    UniPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.deg() != 0) throw StructuralError("polynomial is not invertible modulo " + m.to_string());
  return uni_rem(t0.scaled(F.inv(r0[0])), m);
}

namespace {

// f = g(x^p): keep every p-th coefficient. a^(1/p) = a in GF(p).
UniPoly pth_root(const UniPoly& f) {
  const std::size_t p = f.field().modulus();
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return UniPoly(f.field(), std::move(c));
}

}  // namespace

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw StructuralError("squarefree part of the zero polynomial");
  const PrimeField& F = f.field();
  UniPoly g = f.monic();
  if (g.deg() == 0) return UniPoly::constant(F, 1);
  UniPoly d = g.derivative();
  if (d.is_zero()) return squarefree_part(pth_root(g));
  UniPoly c = uni_gcd(g, d);
  UniPoly w = uni_exact_div(g, c);  // factors with multiplicity not divisible by p
  // Strip from c every factor of w; what is left is a p-th power.
  for (;;) {
    UniPoly h = uni_gcd(c, w);
    if (h.deg() == 0) break;
    c = uni_exact_div(c, h);
  }
  if (c.deg() == 0) return w.monic();
  return (w * squarefree_part(pth_root(c))).monic();
}

UniPoly uni_crt(std::span<const UniPoly> residues, std::span<const UniPoly> moduli) {
  if (residues.size() != moduli.size() || moduli.empty())
    throw StructuralError("uni_crt: need equally many residues and moduli");
  const PrimeField& F = moduli[0].field();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i].is_zero() || moduli[i].deg() == 0)
      throw StructuralError("uni_crt: modulus " + std::to_string(i) + " is constant");
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (uni_gcd(moduli[i], moduli[j]).deg() != 0)
        throw StructuralError("uni_crt: moduli " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not coprime");
    }
  }
  UniPoly f = uni_rem(residues[0], moduli[0]);
  UniPoly M = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    // f + M * ((r_i - f) * M^{-1} mod m_i)
    UniPoly t = uni_rem((residues[i] - f) * uni_inverse_mod(M, moduli[i]), moduli[i]);
    f = f + M * t;
    M = M * moduli[i];
  }
  (void)F;
  return f;
}

}  // namespace sfglm
