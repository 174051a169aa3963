#include "doctest.h"
#include "fixtures.hpp"
#include "sfglm/bms.hpp"
#include "sfglm/fglm.hpp"
#include "sfglm/groebner.hpp"
#include "sfglm/shape.hpp"

using namespace sfglm;

TEST_CASE("classic FGLM on the worked examples") {
  QuotientRing q11(fixtures::drl_basis(fixtures::kGf11));
  CHECK(classic_fglm(q11, Ordering::LEX).to_string() == "[x1^4 + 8*x1 + 9, x2 + 6*x1^2 + 10, x3 + 9]");
  CHECK(classic_fglm(q11, Ordering::DRL) == q11.source());

  QuotientRing q(fixtures::drl_basis(fixtures::kGf65521));
  auto lex = classic_fglm(q, Ordering::LEX);
  CHECK(lex.to_string() == "[x1^4 + 15*x1^2 + 19*x1 + 3, x2^3 + 7*x1^2*x2^2 + 15*x1^2*x2 + 2*x1^3 + 9]");
  CHECK(is_gb(lex.polys, q));
  CHECK(classic_fglm(q, Ordering::DRL) == q.source());

  QuotientRing q2(fixtures::drl_basis(fixtures::kGf2));
  CHECK(classic_fglm(q2, Ordering::LEX).to_string() == "[x1^7 + x1^6 + x1 + 1, x2 + x1^4 + x1^3 + 1]");
}

TEST_CASE("classic FGLM output is a reduced basis of the same ideal") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 2;
    auto G1 = buchberger(gen_random_system(n, 2, 65521, seed), Ordering::DRL);
    QuotientRing Q(G1);
    FglmStats stats;
    auto lex = classic_fglm(Q, Ordering::LEX, &stats);
    CHECK(is_gb(lex.polys, Q));
    CHECK(stats.terms_processed <= Q.degree() * n + lex.polys.size());
    CHECK(buchberger(lex.polys, Ordering::DRL) == G1);
    CHECK(buchberger(G1.polys, Ordering::LEX) == lex);
  }
}

TEST_CASE("buchberger examples") {
  PrimeField F(65521);
  auto p = [](const char* s) { return fixtures::poly(s, 65521, 2, Ordering::DRL); };
  auto G = buchberger({p("x1^2 - x2"), p("x2^2 - 1")}, Ordering::DRL);
  CHECK(G.polys.size() == 2);
  QuotientRing Q(G);
  CHECK(Q.degree() == 4);

  auto same = fixtures::drl_basis(fixtures::kGf65521);
  CHECK(buchberger(same.polys, Ordering::DRL) == same);

  // <g1, g2> over GF(65521) gives the example's DRL basis.
  auto g = buchberger({p("x1^4 + 15*x1^2 + 19*x1 + 3"), p("x2^3 + 7*x1^2*x2^2 + 15*x1^2*x2 + 2*x1^3 + 9")},
                      Ordering::DRL);
  CHECK(g == same);

  // The printed GF(23) basis read over GF(65521) collapses.
  auto printed = parse_system(fixtures::kGf65521Mod23);
  CHECK(buchberger(printed.polys, Ordering::DRL).to_string() == "[1]");
}

TEST_CASE("random systems") {
  auto a = gen_random_system(3, 2, 65521, 7), b = gen_random_system(3, 2, 65521, 7);
  CHECK(a == b);
  CHECK(a.size() == 3);
  CHECK(a[0].size() == 10);
  CHECK(format_system(PrimeField(65521), 3, a) == format_system(PrimeField(65521), 3, b));
  QuotientRing q32(buchberger(a, Ordering::DRL));
  CHECK(q32.degree() == 8);
  QuotientRing q23(buchberger(gen_random_system(2, 3, 65521, 1), Ordering::DRL));
  CHECK(q23.degree() == 9);
}

TEST_CASE("toplevel dispatch") {
  auto r11 = toplevel(fixtures::drl_basis(fixtures::kGf11), {1});
  CHECK(r11.method_used == Method::ShapeProb);
  CHECK(r11.of_what == OfWhat::Ideal);
  CHECK(r11.basis.to_string() == "[x1^4 + 8*x1 + 9, x2 + 6*x1^2 + 10, x3 + 9]");
  CHECK(r11.D == 4);

  ToplevelOptions o2;
  o2.probe = CoordVector{1, 1, 0, 1, 0, 1, 0};
  auto r2 = toplevel(fixtures::drl_basis(fixtures::kGf2), o2);
  CHECK(r2.method_used == Method::ShapeDet);
  CHECK(r2.of_what == OfWhat::Radical);
  CHECK(r2.basis.to_string() == "[x1^3 + 1, x2 + x1]");

  o2.want_radical_ok = false;
  auto r2b = toplevel(fixtures::drl_basis(fixtures::kGf2), o2);
  CHECK(r2b.of_what == OfWhat::Ideal);
  CHECK(r2b.method_used != Method::ShapeDet);
  CHECK(r2b.basis.to_string() == "[x1^7 + x1^6 + x1 + 1, x2 + x1^4 + x1^3 + 1]");

  auto cube = fixtures::drl_basis(fixtures::kMonomialCube);
  auto rc = toplevel(cube, {5});
  CHECK(rc.method_used == Method::Fglm);
  CHECK(rc.of_what == OfWhat::Ideal);
  CHECK(rc.basis.polys == cube.polys);
  CHECK(rc.passes > 0);
  CHECK(rc.stages == std::vector<std::string>{"shape-prob: fail", "shape-prob: fail", "shape-prob: fail",
                                              "shape-det: fail", "bms: fail", "fglm: ok"});

  ToplevelOptions ob;
  ob.probe = fixtures::kGf65521Probe;
  auto rb = toplevel(fixtures::drl_basis(fixtures::kGf65521), ob);
  CHECK(rb.method_used == Method::Bms);
  CHECK(rb.passes == 34);
  CHECK(rb.basis_size == 2);
  CHECK(rb.max_terms == 5);
}

TEST_CASE("toplevel is deterministic") {
  auto G1 = buchberger(gen_random_system(3, 2, 65521, 3), Ordering::DRL);
  auto a = toplevel(G1, {9}), b = toplevel(G1, {9});
  CHECK(a.basis == b.basis);
  CHECK(a.method_used == b.method_used);
  CHECK(to_string(Method::ShapeDet) == std::string("shape-det"));
  CHECK(to_string(OfWhat::Radical) == std::string("radical(I)"));
}
