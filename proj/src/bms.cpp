#include "sfglm/bms.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <unordered_set>

#include "sfglm/errors.hpp"
#include "sfglm/shape.hpp"

namespace sfglm {

namespace {

constexpr Ordering kLex = Ordering::LEX;

using TermSet = std::unordered_set<Term, TermHash>;

bool lex_less(const Term& a, const Term& b) { return term_compare(a, b, kLex) < 0; }

// a <= b componentwise.
bool below(const Term& a, const Term& b) { return a.divides(b); }

Term minus(const Term& a, const Term& b) { return a / b; }

std::vector<Term> sorted(const TermSet& s) {
  std::vector<Term> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

void add_closure(TermSet& delta, const Term& top) {
  const std::size_t n = top.nvars();
  Term t(n);
  while (true) {
    delta.insert(t);
    std::size_t i = 0;
    while (i < n && t[i] == top[i]) t[i++] = 0;
    if (i == n) break;
    ++t[i];
  }
}

// Minimal terms outside a finite downward closed set.
std::vector<Term> corners(const TermSet& delta, std::size_t n) {
  if (delta.empty()) return {Term(n)};
  TermSet out;
  auto is_corner = [&](const Term& t) {
    if (delta.count(t)) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      Term s = t;
      --s[i];
      if (!delta.count(s)) return false;
    }
    return true;
  };
  for (const Term& d : delta)
    for (std::size_t i = 0; i < n; ++i) {
      Term t = d;
      ++t[i];
      if (is_corner(t)) out.insert(t);
    }
  return sorted(out);
}

Elem discrepancy(const MultiPoly& f, const Term& u, ArrayE& E) {
  const PrimeField& F = f.field();
  const Term shift = minus(u, f.leading_term());
  Elem d = 0;
  for (const auto& [t, c] : f.terms()) d = F.fma(d, c, E.value(t * shift));
  return d;
}

// Reduce f by G; with `tail_only` the leading term is left alone.
MultiPoly reduce_by(const MultiPoly& f, const std::vector<MultiPoly>& G, bool tail_only) {
  if (f.is_zero() || G.empty()) return f;
  const PrimeField& F = f.field();
  MultiPoly rem(F, f.nvars(), f.ordering());
  MultiPoly cur = f;
  bool first = true;
  while (!cur.is_zero()) {
    const auto [t, c] = cur.terms().front();
    const MultiPoly* red = nullptr;
    if (!(tail_only && first))
      for (const auto& g : G)
        if (g.leading_term().divides(t) && (!red || lex_less(g.leading_term(), red->leading_term()))) red = &g;
    first = false;
    if (red) {
      cur = cur.sub_mul(F.div(c, red->leading_coeff()), t / red->leading_term(), *red);
    } else {
      rem = rem + MultiPoly::monomial(F, f.ordering(), t, c);
      cur = cur - MultiPoly::monomial(F, f.ordering(), t, c);
    }
  }
  return rem;
}

}  // namespace

ArrayE::ArrayE(const QuotientRing& Q, CoordVector probe) : Q_(Q), r_(std::move(probe)) {
  if (r_.size() != Q.degree()) throw StructuralError("probe vector has wrong length");
  for (auto& x : r_) x %= Q.field().modulus();
  vecs_.emplace(Term(Q.nvars()), Q.unit(0));
}

const CoordVector& ArrayE::vector(const Term& u) {
  if (auto it = vecs_.find(u); it != vecs_.end()) return it->second;
  if (u.nvars() != Q_.nvars()) throw StructuralError("term has wrong number of variables");
  // Step down along a variable whose predecessor is already known, else the last nonzero one.
  std::size_t var = u.nvars();
  for (std::size_t i = 0; i < u.nvars(); ++i) {
    if (u[i] == 0) continue;
    Term p = u;
    --p[i];
    if (vecs_.count(p)) {
      var = i;
      break;
    }
    var = i;
  }
  Term prev = u;
  --prev[var];
  CoordVector v = Q_.matrix(var).apply(vector(prev));
  ++products_;
  return vecs_.emplace(u, std::move(v)).first->second;
}

Elem ArrayE::value(const Term& u) {
  if (auto it = vals_.find(u); it != vals_.end()) return it->second;
  const Elem v = Q_.field().dot(r_, vector(u));
  vals_.emplace(u, v);
  return v;
}

BmsState bms_initial(const PrimeField& F, std::size_t nvars) {
  BmsState st;
  st.F.push_back(MultiPoly::constant(F, nvars, kLex, 1));
  return st;
}

void sakata_update(BmsState& st, const Term& u, ArrayE& E) {
  if (st.u && !lex_less(*st.u, u)) throw InternalError("BMS terms must be processed in increasing order");
  if (st.F.empty()) throw InternalError("BMS state has no polynomials");
  const PrimeField& F = st.F.front().field();
  const std::size_t n = u.nvars();

  std::vector<Elem> d(st.F.size(), 0);
  TermSet delta_old(st.delta.begin(), st.delta.end());
  TermSet delta = delta_old;
  bool any_fail = false;
  for (std::size_t i = 0; i < st.F.size(); ++i) {
    const Term& s = st.F[i].leading_term();
    if (!below(s, u)) continue;
    d[i] = discrepancy(st.F[i], u, E);
    if (d[i]) {
      any_fail = true;
      add_closure(delta, minus(u, s));
    }
  }
  st.u = u;
  if (!any_fail) return;

  std::vector<MultiPoly> next;
  for (const Term& c : corners(delta, n)) {
    // Divisor of c in F, a valid one with the largest leading term first.
    std::ptrdiff_t pick = -1;
    for (std::size_t i = 0; i < st.F.size(); ++i) {
      if (!st.F[i].leading_term().divides(c)) continue;
      if (pick < 0) {
        pick = static_cast<std::ptrdiff_t>(i);
        continue;
      }
      const auto& best = st.F[static_cast<std::size_t>(pick)];
      const bool vi = d[i] == 0, vb = d[static_cast<std::size_t>(pick)] == 0;
      if ((vi && !vb) || (vi == vb && lex_less(best.leading_term(), st.F[i].leading_term())))
        pick = static_cast<std::ptrdiff_t>(i);
    }
    if (pick < 0) throw InternalError("corner " + c.to_tuple() + " has no divisor in F");
    const MultiPoly& f = st.F[static_cast<std::size_t>(pick)];
    const Elem df = d[static_cast<std::size_t>(pick)];
    const Term m = c / f.leading_term();
    MultiPoly h = f.mul_term(m, 1);
    if (df && below(c, u)) {
      const Term need = minus(u, c);
      const Witness* w = nullptr;
      for (const auto& g : st.G)
        if (below(need, g.span) && (!w || lex_less(w->fail, g.fail) || (w->fail == g.fail && lex_less(w->span, g.span))))
          w = &g;
      if (w) h = h.sub_mul(F.div(df, w->discrepancy), minus(w->span, need), w->poly);
    }
    next.push_back(h.monic());
  }

  for (std::size_t i = 0; i < st.F.size(); ++i) {
    if (!d[i]) continue;
    Term span = minus(u, st.F[i].leading_term());
    if (delta_old.count(span)) continue;
    st.G.push_back(Witness{st.F[i], span, u, d[i]});
  }
  st.F = reduce_set(next);
  st.delta = sorted(delta);
}

std::vector<MultiPoly> reduce_set(const std::vector<MultiPoly>& in) {
  std::vector<MultiPoly> F;
  for (const auto& f : in) {
    MultiPoly g = reduce_by(f, F, false);
    if (!g.is_zero()) F.push_back(g.monic());
  }
  for (std::size_t i = 0; i < F.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < F.size(); ++j)
      if (j != i) others.push_back(F[j]);
    F[i] = reduce_by(F[i], others, true);
  }
  return F;
}

std::optional<std::size_t> staircase_size(const std::vector<Term>& lts, std::size_t nvars, std::size_t cap) {
  auto inside = [&](const Term& t) {
    return std::none_of(lts.begin(), lts.end(), [&](const Term& l) { return l.divides(t); });
  };
  Term one(nvars);
  if (!inside(one)) return 0;
  TermSet seen{one};
  std::deque<Term> queue{one};
  while (!queue.empty()) {
    Term t = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < nvars; ++i) {
      Term s = t;
      ++s[i];
      if (seen.count(s) || !inside(s)) continue;
      if (seen.size() >= cap) return std::nullopt;
      seen.insert(s);
      queue.push_back(s);
    }
  }
  return seen.size();
}

namespace {

bool in_ideal(const MultiPoly& f, const QuotientRing& Q) {
  auto v = Q.nf_vector(f);
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

}  // namespace

bool is_gb(const std::vector<MultiPoly>& F, const QuotientRing& Q) {
  for (const auto& f : F)
    if (!in_ideal(f, Q)) return false;
  auto size = staircase_size(leading_terms(F), Q.nvars(), Q.degree());
  return size && *size == Q.degree();
}

BmsResult bms_change(const QuotientRing& Q, const BmsOptions& opts) {
  const PrimeField& F = Q.field();
  const std::size_t n = Q.nvars(), D = Q.degree();
  BmsResult res;
  if (opts.probe) {
    res.probe = *opts.probe;
  } else {
    std::mt19937_64 rng(opts.seed);
    res.probe = random_probe(F, D, rng);
  }
  ArrayE E(Q, res.probe);
  res.probe = E.probe();
  res.pass_cap = 2 * n * D;

  BmsState st = bms_initial(F, n);
  std::vector<bool> verified{false};
  for (Term u(n); res.passes < res.pass_cap;) {
    sakata_update(st, u, E);
    ++res.passes;
    verified.assign(st.F.size(), false);
    for (std::size_t i = 0; i < st.F.size(); ++i) verified[i] = in_ideal(st.F[i], Q);
    res.trace.push_back(u.to_tuple() + " | " + std::to_string(st.F.size()) + " | " + std::to_string(st.delta.size()));
    if (opts.record_history) res.history.push_back(BmsPass{u, st.F, st.delta});
    if (std::all_of(verified.begin(), verified.end(), [](bool b) { return b; })) {
      auto size = staircase_size(leading_terms(st.F), n, D);
      if (size && *size == D) break;
    }

    // Next term: smallest candidate above u.
    std::vector<Term> free_lts = st.delta;
    std::vector<Term> fixed;
    for (std::size_t i = 0; i < st.F.size(); ++i)
      (verified[i] ? fixed : free_lts).push_back(st.F[i].leading_term());
    std::optional<Term> best;
    auto offer = [&](Term t) {
      if (lex_less(u, t) && (!best || lex_less(t, *best))) best = std::move(t);
    };
    for (std::size_t i = 0; i < free_lts.size(); ++i)
      for (std::size_t j = i; j < free_lts.size(); ++j) offer(free_lts[i] * free_lts[j]);
    for (const Term& dl : st.delta)
      for (const Term& l : fixed) offer(dl * l);
    if (!best) break;
    u = *best;
  }

  res.final_F = st.F;
  res.final_delta = st.delta;
  res.matrix_products = E.matrix_products();
  if (is_gb(st.F, Q)) res.basis = GroebnerBasis::make_reduced(st.F, kLex);
  return res;
}

}  // namespace sfglm
