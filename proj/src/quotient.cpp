#include "sfglm/quotient.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <unordered_set>

#include "sfglm/errors.hpp"

namespace sfglm {

SparseMat::SparseMat(PrimeField field, std::vector<Column> columns, std::vector<ColumnKind> kinds)
    : field_(field), cols_(std::move(columns)), kinds_(std::move(kinds)) {
  if (kinds_.size() != cols_.size()) throw StructuralError("SparseMat: kinds/columns length mismatch");
  for (const auto& c : cols_) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].row >= cols_.size() || c[k].value == 0 || (k && c[k - 1].row >= c[k].row))
        throw StructuralError("SparseMat: malformed column");
    }
    nnz_ += c.size();
  }
}

std::size_t SparseMat::count_kind(ColumnKind k) const noexcept {
  return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), k));
}

CoordVector SparseMat::apply(const CoordVector& v) const {
  if (v.size() != dim()) throw StructuralError("apply: dimension mismatch");
  const PrimeField& F = *field_;
  CoordVector out(dim(), 0);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [row, val] : cols_[j]) out[row] = F.fma(out[row], val, v[j]);
  }
  return out;
}

CoordVector SparseMat::apply_transpose(const CoordVector& v) const {
  if (v.size() != dim()) throw StructuralError("apply_transpose: dimension mismatch");
  const PrimeField& F = *field_;
  const std::uint64_t p = F.modulus();
  CoordVector out(dim(), 0);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    // Each product is below 2^62; reducing every 3 keeps the sum in range.
    std::uint64_t acc = 0;
    unsigned pending = 0;
    for (const auto& [row, val] : cols_[j]) {
      acc += static_cast<std::uint64_t>(val) * v[row];
      if (++pending == 3) {
        acc %= p;
        pending = 0;
      }
    }
    out[j] = static_cast<Elem>(acc % p);
  }
  return out;
}

Elem SparseMat::at(std::size_t row, std::size_t col) const {
  const auto& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
  return it != c.end() && it->row == row ? it->value : 0;
}

void SparseMat::dump(std::ostream& os, std::size_t nvars, std::size_t var) const {
  os << dim() << ' ' << nvars << ' ' << var + 1 << ' ' << nnz_ << '\n';
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [row, val] : cols_[j]) os << row << ' ' << j << ' ' << val << '\n';
}

DensityStats density_stats(const SparseMat& T) {
  DensityStats s;
  s.nnz = T.nnz();
  const double d = static_cast<double>(T.dim());
  s.percent_nonzero = d == 0 ? 0.0 : 100.0 * static_cast<double>(s.nnz) / (d * d);
  for (std::size_t i = 0; i < T.dim(); ++i)
    if (T.is_dense_column(i)) ++s.dense_column_count;
  return s;
}

QuotientRing::QuotientRing(const GroebnerBasis& G)
    : field_(G.polys.empty() ? throw StructuralError("empty Groebner basis") : G.polys.front().field()),
      nvars_(G.nvars()),
      gb_(G.reduced ? G : GroebnerBasis::make_reduced(G.polys, G.ordering)) {
  const Ordering ord = gb_.ordering;
  for (const auto& g : gb_.polys) {
    if (g.nvars() != nvars_ || !(g.field() == field_)) throw StructuralError("basis polynomials over different rings");
    if (g.leading_term().is_one()) throw StructuralError("ideal is the whole ring (D = 0)");
  }
  std::vector<Term> lts = leading_terms(gb_.polys);
  for (std::size_t v = 0; v < nvars_; ++v) {
    bool has_power = std::any_of(lts.begin(), lts.end(), [v](const Term& t) {
      return t.pure_power_var() == static_cast<int>(v);
    });
    if (!has_power) throw StructuralError("ideal not zero-dimensional");
  }
  for (std::size_t i = 0; i < gb_.polys.size(); ++i) lead_.emplace(lts[i], i);

  auto in_staircase = [&](const Term& t) {
    return std::none_of(lts.begin(), lts.end(), [&](const Term& l) { return l.divides(t); });
  };
  std::unordered_set<Term, TermHash> seen;
  std::deque<Term> queue{Term::one(nvars_)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Term t = std::move(queue.front());
    queue.pop_front();
    basis_.push_back(t);
    for (std::size_t v = 0; v < nvars_; ++v) {
      Term u = t * Term::variable(nvars_, v);
      if (!seen.contains(u) && in_staircase(u)) {
        seen.insert(u);
        queue.push_back(std::move(u));
      }
    }
  }
  std::sort(basis_.begin(), basis_.end(), TermLess{ord});
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  mats_.resize(nvars_);
}

std::optional<std::size_t> QuotientRing::index_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CoordVector QuotientRing::unit(std::size_t k) const {
  CoordVector v(degree(), 0);
  v.at(k) = 1;
  return v;
}

CoordVector QuotientRing::coords(const MultiPoly& reduced) const {
  CoordVector v(degree(), 0);
  for (const auto& [t, c] : reduced.terms()) {
    auto idx = index_of(t);
    if (!idx) throw StructuralError("coords: term " + t.to_string() + " is not in the canonical basis");
    v[*idx] = c;
  }
  return v;
}

MultiPoly QuotientRing::from_coords(const CoordVector& v) const {
  if (v.size() != degree()) throw StructuralError("from_coords: dimension mismatch");
  std::vector<MultiPoly::Entry> e;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) e.emplace_back(basis_[i], v[i]);
  return MultiPoly::from_terms(field_, nvars_, gb_.ordering, std::move(e));
}

CoordVector QuotientRing::column_for(const Term& product, ColumnKind* kind) const {
  if (auto idx = index_of(product)) {
    *kind = ColumnKind::Unit;
    return unit(*idx);
  }
  if (auto it = lead_.find(product); it != lead_.end()) {
    *kind = ColumnKind::LeadingTerm;
    const MultiPoly& g = gb_.polys[it->second];
    CoordVector v(degree(), 0);
    for (auto e = g.terms().begin() + 1; e != g.terms().end(); ++e) v[*index_of(e->first)] = field_.neg(e->second);
    return v;
  }
  *kind = ColumnKind::Reduced;
  MultiPoly m = MultiPoly::monomial(field_, gb_.ordering, product);
  return coords(normal_form(m, gb_.polys, gb_.ordering));
}

SparseMat QuotientRing::build(std::size_t var) const {
  const std::size_t D = degree();
  std::vector<SparseMat::Column> cols(D);
  std::vector<ColumnKind> kinds(D);
  const Term xv = Term::variable(nvars_, var);
  for (std::size_t i = 0; i < D; ++i) {
    CoordVector v = column_for(basis_[i] * xv, &kinds[i]);
    for (std::size_t r = 0; r < D; ++r)
      if (v[r]) cols[i].push_back({static_cast<std::uint32_t>(r), v[r]});
  }
  return SparseMat(field_, std::move(cols), std::move(kinds));
}

const SparseMat& QuotientRing::matrix(std::size_t var) const {
  if (var >= nvars_) throw StructuralError("variable index out of range");
  std::lock_guard lock(mu_);
  if (!mats_[var]) mats_[var] = std::make_unique<SparseMat>(build(var));
  return *mats_[var];
}

bool QuotientRing::matrix_built(std::size_t var) const {
  std::lock_guard lock(mu_);
  return var < mats_.size() && mats_[var] != nullptr;
}

CoordVector QuotientRing::mult_e(std::size_t var) const {
  if (var >= nvars_) throw StructuralError("variable index out of range");
  std::lock_guard lock(mu_);
  if (mats_[var]) {
    CoordVector v(degree(), 0);
    for (const auto& [row, val] : mats_[var]->column(0)) v[row] = val;
    return v;
  }
  ColumnKind k;
  return column_for(Term::variable(nvars_, var), &k);
}

CoordVector QuotientRing::term_vector(const Term& t) const {
  if (t.nvars() != nvars_) throw StructuralError("term has wrong variable count");
  if (auto idx = index_of(t)) return unit(*idx);
  std::lock_guard lock(mu_);
  if (auto it = term_cache_.find(t); it != term_cache_.end()) return it->second;
  std::size_t var = 0;
  while (t[var] == 0) ++var;
  Term rest = t;
  rest[var] -= 1;
  CoordVector v = matrix(var).apply(term_vector(rest));
  term_cache_.emplace(t, v);
  return v;
}

CoordVector QuotientRing::nf_vector(const MultiPoly& f) const {
  if (f.nvars() != nvars_ || !(f.field() == field_)) throw StructuralError("nf_vector: ring mismatch");
  CoordVector acc(degree(), 0);
  for (const auto& [t, c] : f.terms()) {
    CoordVector v = term_vector(t);
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (v[i]) acc[i] = field_.fma(acc[i], c, v[i]);
  }
  return acc;
}

}  // namespace sfglm
