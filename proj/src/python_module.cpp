#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfglm/bms.hpp"
#include "sfglm/errors.hpp"
#include "sfglm/fglm.hpp"
#include "sfglm/generic.hpp"
#include "sfglm/groebner.hpp"
#include "sfglm/io.hpp"
#include "sfglm/linrec.hpp"
#include "sfglm/shape.hpp"

namespace py = pybind11;
using namespace sfglm;

namespace {

GroebnerBasis load(const std::string& text) { return buchberger(parse_system(text).polys, Ordering::DRL); }

std::vector<std::string> strings(const GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.polys) out.push_back(g.to_string());
  return out;
}

py::int_ big(const BigInt& x) { return py::int_(py::str(x.str())); }

py::dict report(const RunReport& r) {
  py::dict d;
  d["method_used"] = to_string(r.method_used);
  d["of_what"] = to_string(r.of_what);
  d["D"] = r.D;
  d["nnz"] = r.nnz;
  d["density"] = r.density;
  d["passes"] = r.passes;
  d["wall_time"] = r.wall_time;
  d["seed"] = r.seed;
  d["basis_size"] = r.basis_size;
  d["max_terms"] = r.max_terms;
  d["stages"] = r.stages;
  d["basis"] = strings(r.basis);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse change of ordering for zero-dimensional Groebner bases";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);

  m.def(
      "convert",
      [](const std::string& text, std::uint64_t seed, bool radical_ok, std::optional<CoordVector> probe) {
        QuotientRing Q(load(text));
        ToplevelOptions o;
        o.seed = seed;
        o.want_radical_ok = radical_ok;
        o.probe = std::move(probe);
        return report(toplevel(Q, o));
      },
      py::arg("text"), py::arg("seed") = 0, py::arg("radical_ok") = true, py::arg("probe") = py::none(),
      "Run the full cascade on a system file's text and return the run report.");

  m.def(
      "fglm",
      [](const std::string& text, const std::string& target) {
        if (target != "lex" && target != "drl") throw InputError("target must be lex or drl");
        QuotientRing Q(load(text));
        return strings(classic_fglm(Q, target == "lex" ? Ordering::LEX : Ordering::DRL));
      },
      py::arg("text"), py::arg("target") = "lex");

  m.def(
      "shape_prob",
      [](const std::string& text, std::uint64_t seed, std::optional<CoordVector> probe) -> std::optional<std::vector<std::string>> {
        QuotientRing Q(load(text));
        auto res = shape_prob(Q, {seed, std::move(probe)});
        if (!res.basis) return std::nullopt;
        return strings(res.basis->to_groebner());
      },
      py::arg("text"), py::arg("seed") = 0, py::arg("probe") = py::none(), "LEX basis, or None on Fail.");

  m.def(
      "shape_det",
      [](const std::string& text, bool random_probes, std::uint64_t seed) -> py::object {
        QuotientRing Q(load(text));
        auto res = shape_det(Q, {random_probes, seed});
        if (!res.basis) return py::none();
        return py::make_tuple(strings(res.basis->to_groebner()), res.is_radical);
      },
      py::arg("text"), py::arg("random_probes") = false, py::arg("seed") = 0,
      "(radical basis, is_radical), or None when not in shape position.");

  m.def(
      "bms",
      [](const std::string& text, std::uint64_t seed, std::optional<CoordVector> probe) {
        QuotientRing Q(load(text));
        BmsOptions o;
        o.seed = seed;
        o.probe = std::move(probe);
        auto res = bms_change(Q, o);
        py::dict d;
        d["basis"] = res.basis ? py::cast(strings(*res.basis)) : py::none();
        d["passes"] = res.passes;
        d["pass_cap"] = res.pass_cap;
        d["trace"] = res.trace;
        return d;
      },
      py::arg("text"), py::arg("seed") = 0, py::arg("probe") = py::none());

  m.def(
      "canonical_basis",
      [](const std::string& text) {
        QuotientRing Q(load(text));
        std::vector<std::vector<Exponent>> out;
        for (const auto& t : Q.basis()) out.push_back(t.exponents());
        return out;
      },
      py::arg("text"));

  m.def(
      "berlekamp_massey",
      [](const std::vector<Elem>& seq, std::uint32_t p) {
        auto g = berlekamp_massey(PrimeField(p), seq);
        std::vector<Elem> c;
        for (std::size_t i = 0; i <= g.deg(); ++i) c.push_back(g[i]);
        return c;
      },
      py::arg("seq"), py::arg("p"), "Monic minimal polynomial, coefficients from the constant term up.");

  m.def(
      "hilbert_profile",
      [](std::size_t n, std::size_t d) {
        auto h = hilbert_profile(n, d);
        py::list coeffs;
        for (const auto& c : h.coeffs) coeffs.append(big(c));
        py::dict r;
        r["coeffs"] = coeffs;
        r["m0"] = big(h.m0);
        r["k0"] = h.k0;
        r["ideal_degree"] = big(h.ideal_degree);
        return r;
      },
      py::arg("n"), py::arg("d"));

  m.def("asymptotic_estimate", &asymptotic_estimate, py::arg("n"), py::arg("d"));

  m.def(
      "gen_random_system",
      [](std::size_t n, std::size_t d, std::uint32_t p, std::uint64_t seed) {
        return format_system(PrimeField(p), n, gen_random_system(n, d, p, seed));
      },
      py::arg("n"), py::arg("d"), py::arg("p") = 65521, py::arg("seed") = 0, "System file text.");
}
