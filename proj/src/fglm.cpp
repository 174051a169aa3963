#include "sfglm/fglm.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <unordered_map>

#include "sfglm/bms.hpp"
#include "sfglm/errors.hpp"
#include "sfglm/shape.hpp"

namespace sfglm {

namespace {

struct EchelonRow {
  std::size_t pivot;
  CoordVector vec;    // vec[pivot] == 1
  CoordVector combo;  // vec as a combination of the staircase vectors
};

}  // namespace

GroebnerBasis classic_fglm(const QuotientRing& Q, Ordering target, FglmStats* stats) {
  const PrimeField& F = Q.field();
  const std::size_t n = Q.nvars(), D = Q.degree();
  FglmStats local;
  FglmStats& st = stats ? *stats : local;

  std::vector<Term> stair;
  std::unordered_map<Term, CoordVector, TermHash> vec_of;
  std::vector<EchelonRow> rows;
  std::vector<MultiPoly> out;
  std::set<Term, TermLess> cand{TermLess{target}};
  cand.insert(Term(n));

  while (!cand.empty()) {
    Term t = *cand.begin();
    cand.erase(cand.begin());
    if (vec_of.count(t)) continue;
    if (std::any_of(out.begin(), out.end(), [&](const MultiPoly& g) { return g.leading_term().divides(t); }))
      continue;
    ++st.terms_processed;

    CoordVector v;
    if (t.is_one()) {
      v = Q.unit(0);
    } else {
      for (std::size_t i = 0; i < n && v.empty(); ++i) {
        if (!t[i]) continue;
        Term s = t;
        --s[i];
        if (auto it = vec_of.find(s); it != vec_of.end()) {
          v = Q.matrix(i).apply(it->second);
          ++st.matrix_products;
        }
      }
      if (v.empty()) throw InternalError("fglm candidate " + t.to_tuple() + " has no staircase predecessor");
    }

    const CoordVector orig = v;
    CoordVector combo(stair.size() + 1, 0);
    for (const auto& row : rows) {
      const Elem c = v[row.pivot];
      if (!c) continue;
      const Elem m = F.neg(c);
      for (std::size_t k = 0; k < D; ++k)
        if (row.vec[k]) v[k] = F.fma(v[k], m, row.vec[k]);
      for (std::size_t k = 0; k < row.combo.size(); ++k)
        if (row.combo[k]) combo[k] = F.fma(combo[k], m, row.combo[k]);
    }
    auto piv = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (piv == v.end()) {
      // t + sum combo_j s_j = 0 in the quotient.
      std::vector<MultiPoly::Entry> e{{t, 1}};
      for (std::size_t j = 0; j < stair.size(); ++j)
        if (combo[j]) e.emplace_back(stair[j], combo[j]);
      out.push_back(MultiPoly::from_terms(F, n, target, std::move(e)));
      continue;
    }
    if (stair.size() == D) throw InternalError("fglm staircase exceeds the quotient dimension");
    combo[stair.size()] = 1;
    const Elem inv = F.inv(*piv);
    for (auto& x : v) x = F.mul(x, inv);
    for (auto& x : combo) x = F.mul(x, inv);
    rows.push_back(EchelonRow{static_cast<std::size_t>(piv - v.begin()), std::move(v), std::move(combo)});
    for (auto& row : rows) row.combo.resize(stair.size() + 2, 0);
    stair.push_back(t);
    vec_of.emplace(t, orig);
    for (std::size_t i = 0; i < n; ++i) {
      Term s = t;
      ++s[i];
      cand.insert(std::move(s));
    }
  }
  if (stair.size() != D) throw InternalError("fglm staircase has the wrong size");
  return GroebnerBasis::make_reduced(std::move(out), target);
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::ShapeProb: return "shape-prob";
    case Method::ShapeDet: return "shape-det";
    case Method::Bms: return "bms";
    case Method::Fglm: return "fglm";
  }
  return "?";
}

const char* to_string(OfWhat w) noexcept { return w == OfWhat::Ideal ? "I" : "radical(I)"; }

void fill_statistics(RunReport& r, const QuotientRing& Q) {
  r.D = Q.degree();
  r.nnz = 0;
  std::size_t built = 0;
  for (std::size_t i = 0; i < Q.nvars(); ++i) {
    if (!Q.matrix_built(i)) continue;
    ++built;
    r.nnz += Q.matrix(i).nnz();
  }
  const double cells = static_cast<double>(built) * static_cast<double>(r.D) * static_cast<double>(r.D);
  r.density = cells > 0 ? static_cast<double>(r.nnz) / cells : 0.0;
  r.basis_size = r.basis.polys.size();
  r.max_terms = 0;
  for (const auto& g : r.basis.polys) r.max_terms = std::max(r.max_terms, g.size());
}

RunReport toplevel(const QuotientRing& Q, const ToplevelOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.seed = opts.seed;
  auto finish = [&](Method m, OfWhat w, GroebnerBasis G) {
    rep.method_used = m;
    rep.of_what = w;
    rep.basis = std::move(G);
    fill_statistics(rep, Q);
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  std::mt19937_64 rng(opts.seed);
  const std::size_t attempts = opts.probe ? 1 : std::max<std::size_t>(opts.shape_attempts, 1);
  for (std::size_t a = 0; a < attempts; ++a) {
    ShapeProbOptions so;
    so.probe = opts.probe ? *opts.probe : random_probe(Q.field(), Q.degree(), rng);
    auto res = shape_prob(Q, so);
    rep.stages.push_back(std::string("shape-prob: ") + (res.basis ? "ok" : "fail"));
    if (res.basis) return finish(Method::ShapeProb, OfWhat::Ideal, res.basis->to_groebner());
  }

  auto det = shape_det(Q, {false, opts.seed});
  if (!det.basis) {
    rep.stages.push_back("shape-det: fail");
  } else if (det.is_radical) {
    rep.stages.push_back("shape-det: ok");
    return finish(Method::ShapeDet, OfWhat::Ideal, det.basis->to_groebner());
  } else if (opts.want_radical_ok) {
    rep.stages.push_back("shape-det: ok (radical)");
    return finish(Method::ShapeDet, OfWhat::Radical, det.basis->to_groebner());
  } else {
    rep.stages.push_back("shape-det: declined (radical only)");
  }

  BmsOptions bo;
  bo.seed = opts.seed;
  bo.probe = opts.probe;
  auto bms = bms_change(Q, bo);
  rep.passes = bms.passes;
  rep.stages.push_back(std::string("bms: ") + (bms.basis ? "ok" : "fail"));
  if (bms.basis) return finish(Method::Bms, OfWhat::Ideal, std::move(*bms.basis));

  rep.stages.push_back("fglm: ok");
  return finish(Method::Fglm, OfWhat::Ideal, classic_fglm(Q, Ordering::LEX));
}

RunReport toplevel(const GroebnerBasis& G1, const ToplevelOptions& opts) {
  QuotientRing Q(G1);
  return toplevel(Q, opts);
}

}  // namespace sfglm
