#include "sfglm/shape.hpp"

#include <algorithm>

#include "sfglm/errors.hpp"
#include "sfglm/linrec.hpp"

namespace sfglm {

namespace {

bool is_zero(const CoordVector& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Elem dot(const PrimeField& F, const CoordVector& a, const CoordVector& b) { return F.dot(a, b); }

// g(T) v by Horner's rule.
CoordVector poly_apply(const SparseMat& T, const UniPoly& g, const CoordVector& v) {
  const PrimeField& F = T.field();
  CoordVector acc(v.size(), 0);
  if (g.is_zero()) return acc;
  for (std::size_t k = g.deg() + 1; k-- > 0;) {
    acc = T.apply(acc);
    const Elem c = g[k];
    if (c)
      for (std::size_t i = 0; i < v.size(); ++i) acc[i] = F.fma(acc[i], c, v[i]);
  }
  return acc;
}

UniPoly from_coeffs(const PrimeField& F, std::vector<Elem> c) { return UniPoly(F, std::move(c)); }

}  // namespace

GroebnerBasis ShapeBasis::to_groebner() const {
  const std::size_t n = nvars();
  std::vector<MultiPoly> polys{f1.to_multi(n, Ordering::LEX)};
  for (std::size_t k = 0; k < tails.size(); ++k) {
    MultiPoly xk = MultiPoly::monomial(f1.field(), Ordering::LEX, Term::variable(n, k + 1));
    polys.push_back(xk - tails[k].to_multi(n, Ordering::LEX));
  }
  return GroebnerBasis::make_reduced(std::move(polys), Ordering::LEX);
}

CoordVector random_probe(const PrimeField& F, std::size_t D, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, F.modulus() - 1);
  CoordVector r(D);
  for (auto& x : r) x = dist(rng);
  return r;
}

ShapeProbResult shape_prob(const QuotientRing& Q, const ShapeProbOptions& opts) {
  const PrimeField& F = Q.field();
  const std::size_t D = Q.degree(), n = Q.nvars();
  ShapeProbResult res{std::nullopt, {}, {}, UniPoly(F), {}};
  if (opts.probe) {
    if (opts.probe->size() != D) throw StructuralError("probe vector has wrong length");
    res.probe = *opts.probe;
    for (auto& x : res.probe) x %= F.modulus();
  } else {
    std::mt19937_64 rng(opts.seed);
    res.probe = random_probe(F, D, rng);
  }
  const SparseMat& T1 = Q.matrix(0);
  std::vector<CoordVector> v(n);
  for (std::size_t i = 1; i < n; ++i) v[i] = Q.mult_e(i);

  // r_i = (T1^t)^i r; s_i = <r_i, e>; b_{m,j} = <r_j, T_m e> for j < D.
  std::vector<std::vector<Elem>> b(n);
  CoordVector r = res.probe;
  res.sequence.reserve(2 * D);
  for (std::size_t i = 0; i < 2 * D; ++i) {
    if (i) r = T1.apply_transpose(r);
    res.sequence.push_back(r[0]);
    if (i < D)
      for (std::size_t m = 1; m < n; ++m) b[m].push_back(dot(F, r, v[m]));
  }
  res.minpoly = berlekamp_massey(F, res.sequence);
  if (res.minpoly.deg() != D) return res;

  ShapeBasis sb{res.minpoly, {}};
  HankelSystem sys{D, std::vector<Elem>(res.sequence.begin(), res.sequence.end() - 1), {}};
  for (std::size_t m = 1; m < n; ++m) {
    sys.rhs = b[m];
    auto c = hankel_solve(F, sys);
    res.hankel_solutions.push_back(c);
    sb.tails.push_back(from_coeffs(F, std::move(c)));
  }
  res.basis = std::move(sb);
  return res;
}

ShapeBasis split_shape_component(const ShapeBasis& component, const UniPoly& factor) {
  if (factor.is_zero() || !uni_rem(component.f1, factor).is_zero())
    throw StructuralError("split_shape_component: " + factor.to_string() + " does not divide " +
                          component.f1.to_string());
  ShapeBasis r{factor.monic(), {}};
  for (const auto& t : component.tails) r.tails.push_back(uni_rem(t, r.f1));
  return r;
}

ShapeBasis crt_combine(const std::vector<ShapeBasis>& components) {
  if (components.empty()) throw StructuralError("crt_combine: no components");
  const std::size_t ntails = components[0].tails.size();
  std::vector<UniPoly> moduli;
  for (const auto& c : components) {
    if (c.tails.size() != ntails) throw StructuralError("crt_combine: components over different rings");
    moduli.push_back(c.f1);
  }
  ShapeBasis out{moduli[0], {}};
  for (std::size_t k = 1; k < moduli.size(); ++k) out.f1 = out.f1 * moduli[k];
  for (std::size_t j = 0; j < ntails; ++j) {
    std::vector<UniPoly> residues;
    for (const auto& c : components) residues.push_back(c.tails[j]);
    out.tails.push_back(uni_crt(residues, moduli));
  }
  return out;
}

ShapeDetResult shape_det(const QuotientRing& Q, const ShapeDetOptions& opts) {
  const PrimeField& F = Q.field();
  const std::size_t D = Q.degree(), n = Q.nvars();
  const SparseMat& T1 = Q.matrix(0);
  ShapeDetResult res{std::nullopt, false, UniPoly::constant(F, 1), {}};
  WiedemannTrace& tr = res.trace;

  // w[m] = P(T1) T_m e with P the product of the factors found so far.
  std::vector<CoordVector> w(n);
  for (std::size_t m = 1; m < n; ++m) w[m] = Q.mult_e(m);
  CoordVector b = Q.unit(0);
  std::size_t d = 0;
  std::mt19937_64 rng(opts.seed);
  const std::size_t max_probes = opts.random_probes ? D + 16 : D;

  for (std::size_t k = 0; !is_zero(b); ++k) {
    if (k >= max_probes) throw InternalError("deterministic Wiedemann loop ran out of probes");
    CoordVector probe = opts.random_probes ? random_probe(F, D, rng) : Q.unit(k);
    const std::size_t len = 2 * (D - d);
    std::vector<Elem> s;
    std::vector<std::vector<Elem>> rhs(n);
    CoordVector r = probe;
    for (std::size_t i = 0; i < len; ++i) {
      if (i) r = T1.apply_transpose(r);
      s.push_back(dot(F, r, b));
      for (std::size_t m = 1; m < n; ++m) rhs[m].push_back(dot(F, r, w[m]));
    }
    UniPoly g = berlekamp_massey(F, s);
    if (g.deg() == 0) continue;

    const std::size_t dg = g.deg();
    std::vector<UniPoly> tails;
    HankelSystem sys{dg, std::vector<Elem>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(2 * dg - 1)), {}};
    for (std::size_t m = 1; m < n; ++m) {
      sys.rhs.assign(rhs[m].begin(), rhs[m].begin() + static_cast<std::ptrdiff_t>(dg));
      tails.push_back(from_coeffs(F, hankel_solve(F, sys)));
    }

    res.f1 = res.f1 * g;
    d = res.f1.deg();
    b = poly_apply(T1, g, b);
    for (std::size_t m = 1; m < n; ++m) w[m] = poly_apply(T1, g, w[m]);
    tr.factors.push_back(g);
    tr.tails.push_back(std::move(tails));
    tr.probes.push_back(std::move(probe));
    tr.sequences.push_back(std::move(s));
    tr.b_vectors.push_back(b);
  }
  if (res.f1.deg() != D) return res;

  std::vector<ShapeBasis> parts;
  for (std::size_t i = 0; i < tr.factors.size(); ++i) parts.push_back(ShapeBasis{tr.factors[i], tr.tails[i]});

  const UniPoly fbar = squarefree_part(res.f1);
  res.is_radical = fbar == res.f1;
  if (!res.is_radical) {
    // Peel off gcds so the pieces are pairwise coprime with product fbar.
    std::vector<ShapeBasis> split;
    UniPoly rest = fbar;
    for (const auto& part : parts) {
      if (rest.deg() == 0) break;
      UniPoly h = uni_gcd(part.f1, rest);
      if (h.deg() == 0) continue;
      split.push_back(split_shape_component(part, h));
      rest = uni_exact_div(rest, h);
    }
    if (rest.deg() != 0) throw InternalError("squarefree part not covered by the Wiedemann factors");
    parts = std::move(split);
  }
  res.basis = crt_combine(parts);
  return res;
}

UnivariateResult incremental_minpoly(const SparseMat& T, const CoordVector& r, std::size_t window) {
  if (window == 0) throw StructuralError("stability window must be at least 1");
  if (r.size() != T.dim()) throw StructuralError("probe vector has wrong length");
  const PrimeField& F = T.field();
  const std::size_t limit = 2 * T.dim();
  UnivariateResult res{UniPoly(F), 0, 0};
  std::vector<Elem> s;
  CoordVector cur = r;
  std::size_t stable = 0;
  while (true) {
    for (int k = 0; k < 2; ++k) {
      if (!s.empty()) cur = T.apply_transpose(cur);
      s.push_back(cur[0]);
    }
    ++res.steps;
    UniPoly g = berlekamp_massey(F, s);
    if (res.steps > 1 && g == res.poly) ++stable;
    else stable = 0;
    res.poly = std::move(g);
    if (stable >= window || s.size() >= limit) break;
  }
  res.sequence_length = s.size();
  return res;
}

UnivariateResult incremental_univariate(const QuotientRing& Q, std::uint64_t seed, std::size_t window) {
  std::mt19937_64 rng(seed);
  return incremental_minpoly(Q.matrix(0), random_probe(Q.field(), Q.degree(), rng), window);
}

}  // namespace sfglm
