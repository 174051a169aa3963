#include "sfglm/groebner.hpp"

#include <algorithm>
#include <random>

#include "sfglm/errors.hpp"

namespace sfglm {

namespace {

struct Pair {
  std::size_t i, j;
  Term lcm;
};

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const Term& l) {
  const PrimeField& F = f.field();
  MultiPoly a = f.mul_term(l / f.leading_term(), F.inv(f.leading_coeff()));
  return a.sub_mul(F.inv(g.leading_coeff()), l / g.leading_term(), g);
}

bool coprime(const Term& a, const Term& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& input, Ordering ord, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::vector<MultiPoly> G;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    MultiPoly r = normal_form(f.with_ordering(ord), G, ord);
    if (!r.is_zero()) G.push_back(r.monic());
  }
  if (G.empty()) throw StructuralError("buchberger: no nonzero input polynomials");

  auto lt = [&](std::size_t k) -> const Term& { return G[k].leading_term(); };
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> done;
  auto add_element = [&](std::size_t k) {
    done.resize(G.size());
    for (auto& row : done) row.resize(G.size(), false);
    for (std::size_t i = 0; i < k; ++i) pairs.push_back(Pair{i, k, lt(i).lcm(lt(k))});
  };
  for (std::size_t k = 0; k < G.size(); ++k) add_element(k);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return !done[a][b];
  };
  while (!pairs.empty()) {
    // Normal selection: smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(), [ord](const Pair& a, const Pair& b) {
      return term_compare(a.lcm, b.lcm, ord) < 0;
    });
    Pair pr = *it;
    pairs.erase(it);
    done[pr.i][pr.j] = true;
    ++st.pairs_considered;
    if (coprime(lt(pr.i), lt(pr.j))) {
      ++st.product_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k)
      chain = k != pr.i && k != pr.j && lt(k).divides(pr.lcm) && !pending(pr.i, k) && !pending(pr.j, k);
    if (chain) {
      ++st.chain_skips;
      continue;
    }
    MultiPoly r = normal_form(spoly(G[pr.i], G[pr.j], pr.lcm), G, ord);
    if (r.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    G.push_back(r.monic());
    add_element(G.size() - 1);
  }
  return GroebnerBasis::make_reduced(std::move(G), ord);
}

std::vector<Term> monomials_up_to(std::size_t n, std::size_t d) {
  std::vector<Term> out;
  Term t(n);
  while (true) {
    if (t.degree() <= d) out.push_back(t);
    std::size_t i = 0;
    while (i < n && t[i] == d) t[i++] = 0;
    if (i == n) break;
    ++t[i];
  }
  return out;
}

std::vector<MultiPoly> gen_random_system(std::size_t n, std::size_t d, std::uint32_t p, std::uint64_t seed,
                                         Ordering ord) {
  if (n == 0 || d == 0) throw StructuralError("gen_random_system needs n >= 1 and d >= 1");
  PrimeField F(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> any(0, p - 1), nonzero(1, p - 1);
  const auto terms = monomials_up_to(n, d);
  std::vector<MultiPoly> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<MultiPoly::Entry> e;
    for (const auto& t : terms) e.emplace_back(t, t.degree() == d ? nonzero(rng) : any(rng));
    out.push_back(MultiPoly::from_terms(F, n, ord, std::move(e)));
  }
  return out;
}

}  // namespace sfglm
