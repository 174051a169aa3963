#include "sfglm/multipoly.hpp"

#include <algorithm>
#include <map>

#include "sfglm/errors.hpp"

namespace sfglm {

MultiPoly MultiPoly::from_terms(PrimeField field, std::size_t nvars, Ordering ord,
                                std::vector<Entry> entries) {
  MultiPoly r(field, nvars, ord);
  for (auto& [t, c] : entries) {
    if (t.nvars() != nvars) throw StructuralError("term has wrong variable count");
    c %= field.modulus();
  }
  std::sort(entries.begin(), entries.end(),
            [ord](const Entry& a, const Entry& b) { return term_compare(a.first, b.first, ord) > 0; });
  for (auto& e : entries) {
    if (!r.terms_.empty() && r.terms_.back().first == e.first) {
      r.terms_.back().second = field.add(r.terms_.back().second, e.second);
    } else {
      if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(e));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
  return r;
}

MultiPoly MultiPoly::constant(PrimeField field, std::size_t nvars, Ordering ord, Elem c) {
  MultiPoly r(field, nvars, ord);
  c %= field.modulus();
  if (c != 0) r.terms_.emplace_back(Term(nvars), c);
  return r;
}

MultiPoly MultiPoly::monomial(PrimeField field, Ordering ord, Term t, Elem c) {
  MultiPoly r(field, t.nvars(), ord);
  c %= field.modulus();
  if (c != 0) r.terms_.emplace_back(std::move(t), c);
  return r;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
  return terms_.front().first;
}

Elem MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw StructuralError("leading coefficient of the zero polynomial");
  return terms_.front().second;
}

Elem MultiPoly::coeff(const Term& t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, [this](const Entry& e, const Term& key) {
    return term_compare(e.first, key, ord_) > 0;
  });
  return it != terms_.end() && it->first == t ? it->second : 0;
}

MultiPoly MultiPoly::with_ordering(Ordering ord) const {
  if (ord == ord_) return *this;
  MultiPoly r(field_, nvars_, ord);
  r.terms_ = terms_;
  std::sort(r.terms_.begin(), r.terms_.end(),
            [ord](const Entry& a, const Entry& b) { return term_compare(a.first, b.first, ord) > 0; });
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading_coeff()));
}

MultiPoly MultiPoly::scaled(Elem c) const {
  MultiPoly r(field_, nvars_, ord_);
  if (c % field_.modulus() == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [t, a] : terms_) r.terms_.emplace_back(t, field_.mul(a, c));
  return r;
}

MultiPoly MultiPoly::mul_term(const Term& t, Elem c) const {
  MultiPoly r(field_, nvars_, ord_);
  if (c % field_.modulus() == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [s, a] : terms_) r.terms_.emplace_back(s * t, field_.mul(a, c));
  return r;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_)
    throw StructuralError("polynomials over different rings");
  if (ord_ != o.ord_) throw StructuralError("polynomials with different orderings");
}

MultiPoly MultiPoly::sub_mul(Elem c, const Term& t, const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(field_, nvars_, ord_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  const Elem nc = field_.neg(c % field_.modulus());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end()) {
      r.terms_.push_back(*i++);
      continue;
    }
    Term tj = j->first * t;
    auto cmp = i == terms_.end() ? std::strong_ordering::less : term_compare(i->first, tj, ord_);
    if (cmp > 0) {
      r.terms_.push_back(*i++);
    } else if (cmp < 0) {
      Elem v = field_.mul(nc, j->second);
      if (v) r.terms_.emplace_back(std::move(tj), v);
      ++j;
    } else {
      Elem v = field_.fma(i->second, nc, j->second);
      if (v) r.terms_.emplace_back(std::move(tj), v);
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  return sub_mul(field_.neg(1), Term(nvars_), o);
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return sub_mul(1, Term(nvars_), o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  std::vector<Entry> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& [s, a] : terms_)
    for (const auto& [t, b] : o.terms_) acc.emplace_back(s * t, field_.mul(a, b));
  return from_terms(field_, nvars_, ord_, std::move(acc));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return field_ == o.field_ && nvars_ == o.nvars_ && with_ordering(o.ord_).terms_ == o.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (t.is_one()) {
      s += std::to_string(c);
    } else if (c == 1) {
      s += t.to_string();
    } else {
      s += std::to_string(c) + "*" + t.to_string();
    }
  }
  return s;
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> G, Ordering ord) {
  const PrimeField& F = f.field();
  std::vector<const MultiPoly*> reducers;
  std::vector<MultiPoly> resorted;
  resorted.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (g.nvars() != f.nvars() || !(g.field() == F)) throw StructuralError("normal_form: ring mismatch");
    resorted.push_back(g.with_ordering(ord));
  }
  for (const auto& g : resorted) reducers.push_back(&g);
  std::sort(reducers.begin(), reducers.end(), [ord](const MultiPoly* a, const MultiPoly* b) {
    return term_compare(a->leading_term(), b->leading_term(), ord) < 0;
  });

  std::map<Term, Elem, TermGreater> work{TermGreater{ord}};
  for (const auto& [t, c] : f.terms()) work.emplace(t, c);
  std::vector<MultiPoly::Entry> rest;
  while (!work.empty()) {
    auto it = work.begin();
    const MultiPoly* red = nullptr;
    for (const MultiPoly* g : reducers) {
      if (g->leading_term().divides(it->first)) {
        red = g;
        break;
      }
    }
    if (!red) {
      rest.emplace_back(it->first, it->second);
      work.erase(it);
      continue;
    }
    Term q = it->first / red->leading_term();
    Elem factor = F.neg(F.div(it->second, red->leading_coeff()));
    work.erase(it);
    for (auto g = red->terms().begin() + 1; g != red->terms().end(); ++g) {
      Term t = g->first * q;
      auto [pos, inserted] = work.try_emplace(std::move(t), 0);
      pos->second = F.fma(pos->second, factor, g->second);
      if (pos->second == 0) work.erase(pos);
    }
  }
  // `rest` is already in decreasing order.
  MultiPoly r = MultiPoly::from_terms(F, f.nvars(), ord, std::move(rest));
  return r;
}

std::vector<Term> leading_terms(std::span<const MultiPoly> polys) {
  std::vector<Term> r;
  r.reserve(polys.size());
  for (const auto& p : polys) r.push_back(p.leading_term());
  return r;
}

GroebnerBasis GroebnerBasis::make_reduced(std::vector<MultiPoly> polys, Ordering ord) {
  std::vector<MultiPoly> work;
  for (auto& p : polys)
    if (!p.is_zero()) work.push_back(p.with_ordering(ord).monic());
  std::sort(work.begin(), work.end(), [ord](const MultiPoly& a, const MultiPoly& b) {
    return term_compare(a.leading_term(), b.leading_term(), ord) < 0;
  });
  // Drop elements whose leading term is divisible by an earlier one.
  std::vector<MultiPoly> minimal;
  for (auto& p : work) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const MultiPoly& q) {
      return q.leading_term().divides(p.leading_term());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others, ord).monic();
  }
  return GroebnerBasis{std::move(minimal), ord, true};
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  return ordering == o.ordering && polys == o.polys;
}

std::string GroebnerBasis::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string();
  }
  return s + "]";
}

}  // namespace sfglm
