#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "sfglm/bms.hpp"
#include "sfglm/fglm.hpp"
#include "sfglm/groebner.hpp"
#include "sfglm/linrec.hpp"

using namespace sfglm;

namespace {

std::vector<std::string> strings(const std::vector<MultiPoly>& F) {
  std::vector<std::string> out;
  for (const auto& f : F) out.push_back(f.to_string());
  return out;
}

std::vector<std::string> tuples(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.to_tuple());
  return out;
}

}  // namespace

TEST_CASE("ArrayE values") {
  QuotientRing Q(fixtures::drl_basis(fixtures::kGf11));
  ArrayE E(Q, {8, 4, 8, 6});
  CHECK(E.value(Term{0, 0, 0}) == 8);
  CHECK(E.value(Term{1, 0, 0}) == 4);
  CHECK(E.value(Term{3, 0, 0}) == 7);
  ArrayE A(Q, {8, 4, 8, 6}), B(Q, {8, 4, 8, 6});
  A.value(Term{1, 0, 0});
  B.value(Term{0, 1, 0});
  CHECK(A.value(Term{1, 1, 0}) == B.value(Term{1, 1, 0}));
  CHECK(A.value(Term{2, 3, 1}) == B.value(Term{2, 3, 1}));
  CHECK_THROWS(ArrayE(Q, {1, 2}));
}

TEST_CASE("BMS reproduces the worked example table") {
  QuotientRing Q(fixtures::drl_basis(fixtures::kGf65521));
  BmsOptions opts;
  opts.probe = fixtures::kGf65521Probe;
  opts.record_history = true;
  auto res = bms_change(Q, opts);

  const std::map<std::string, std::vector<std::string>> want{
      {"(0,0)", {"x1", "x2"}},
      {"(1,0)", {"x1 + 65437", "x2"}},
      {"(2,0)", {"x1^2 + 65437*x1 + 21672", "x2"}},
      {"(3,0)", {"x1^2 + 62861*x1 + 41493", "x2"}},
      {"(4,0)", {"x1^3 + 62861*x1^2 + 35812*x1 + 18557", "x2"}},
      {"(5,0)", {"x1^3 + 30688*x1^2 + 45566*x1 + 54643", "x2"}},
      {"(6,0)", {"x1^4 + 30688*x1^3 + 20026*x1^2 + 45766*x1 + 5434", "x2"}},
      {"(7,0)", {"x1^4 + 15*x1^2 + 19*x1 + 3", "x2"}},
      {"(0,1)", {"x1^4 + 15*x1^2 + 19*x1 + 3", "x2 + 65034*x1^3 + 24330*x1^2 + 14876*x1 + 52361"}},
      {"(0,2)",
       {"x1^4 + 15*x1^2 + 19*x1 + 3", "x1*x2 + 20826*x1^3 + 28385*x1^2 + 55917*x1 + 37174",
        "x2^2 + 38885*x2 + 65360*x1^3 + 1782*x1^2 + 36000*x1 + 39469"}},
  };
  std::size_t seen = 0;
  for (const auto& pass : res.history) {
    auto it = want.find(pass.u.to_tuple());
    if (it == want.end()) continue;
    ++seen;
    CHECK(strings(pass.F) == it->second);
    if (it->first == "(2,0)") CHECK(tuples(pass.delta) == std::vector<std::string>{"(0,0)", "(1,0)"});
    if (it->first == "(4,0)") CHECK(tuples(pass.delta) == std::vector<std::string>{"(0,0)", "(1,0)", "(2,0)"});
  }
  CHECK(seen == want.size());
  CHECK(res.history.front().u.to_tuple() == "(0,0)");
  CHECK(res.history.back().u.to_tuple() == "(3,5)");
  CHECK(res.trace.front() == "(0,0) | 2 | 1");

  REQUIRE(res.basis);
  CHECK(res.basis->to_string() == "[x1^4 + 15*x1^2 + 19*x1 + 3, x2^3 + 7*x1^2*x2^2 + 15*x1^2*x2 + 2*x1^3 + 9]");
  CHECK(res.passes <= res.pass_cap);
  CHECK(res.pass_cap == 48);
  CHECK(res.final_delta.size() == 12);
  CHECK(is_gb(res.basis->polys, Q));
}

TEST_CASE("BMS delta sets grow and stay downward closed") {
  QuotientRing Q(fixtures::drl_basis(fixtures::kGf65521));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    BmsOptions opts;
    opts.seed = seed;
    opts.record_history = true;
    auto res = bms_change(Q, opts);
    CHECK(res.passes <= res.pass_cap);
    std::vector<Term> prev;
    for (const auto& pass : res.history) {
      for (const auto& t : prev) CHECK(std::find(pass.delta.begin(), pass.delta.end(), t) != pass.delta.end());
      for (const auto& t : pass.delta)
        for (std::size_t i = 0; i < t.nvars(); ++i) {
          if (!t[i]) continue;
          Term s = t;
          --s[i];
          CHECK(std::find(pass.delta.begin(), pass.delta.end(), s) != pass.delta.end());
        }
      prev = pass.delta;
    }
  }
}

TEST_CASE("BMS along the x1 axis matches Berlekamp-Massey") {
  QuotientRing Q(fixtures::drl_basis(fixtures::kGf65521));
  ArrayE E(Q, fixtures::kGf65521Probe);
  BmsState st = bms_initial(Q.field(), 2);
  std::vector<Elem> seq;
  for (Exponent k = 0; k < 8; ++k) {
    sakata_update(st, Term{k, 0}, E);
    seq.push_back(E.value(Term{k, 0}));
    // After one value x1 is trivially valid; BM already commits to x1 - E(0).
    if (k == 0) continue;
    auto bm = berlekamp_massey(Q.field(), seq);
    CHECK(st.F.front() == bm.to_multi(2, Ordering::LEX));
  }
}

TEST_CASE("BMS fails on the monomial cube") {
  QuotientRing Q(fixtures::drl_basis(fixtures::kMonomialCube));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto res = bms_change(Q, {seed, std::nullopt, false});
    CHECK(!res.basis);
    CHECK(res.passes <= res.pass_cap);
  }
}

TEST_CASE("BMS on a degree one ideal") {
  QuotientRing Q(fixtures::drl_basis("p 65521\nvars 3\nx1 - 4\nx2 + 1\nx3 - 7\n"));
  auto res = bms_change(Q, {3, std::nullopt, false});
  REQUIRE(res.basis);
  CHECK(res.basis->to_string() == "[x1 + 65517, x2 + 1, x3 + 65514]");
  CHECK(res.passes <= 6);
}

TEST_CASE("reduce_set") {
  auto p = [](const char* s) { return fixtures::poly(s, 65521, 2); };
  CHECK(strings(reduce_set({p("x1^2"), p("x1^2 + x1")})) == std::vector<std::string>{"x1^2", "x1"});
  std::vector<MultiPoly> done{p("x1^4 + 3"), p("x2 + x1")};
  CHECK(reduce_set(done) == done);
  CHECK(strings(reduce_set({p("x1^2 + 1"), p("x2 + x1^3")})) == std::vector<std::string>{"x1^2 + 1", "x2 + 65520*x1"});
}

TEST_CASE("is_gb") {
  QuotientRing Q(fixtures::drl_basis(fixtures::kGf65521));
  auto p = [](const char* s) { return fixtures::poly(s, 65521, 2); };
  CHECK(is_gb({p("x1^4 + 15*x1^2 + 19*x1 + 3"), p("x2^3 + 7*x1^2*x2^2 + 15*x1^2*x2 + 2*x1^3 + 9")}, Q));
  CHECK(!is_gb({p("1")}, Q));
  CHECK(!is_gb({p("x1^4 + 15*x1^2 + 19*x1 + 3")}, Q));
  CHECK(staircase_size({Term{2, 0}, Term{0, 3}}, 2, 100) == 6);
  CHECK(!staircase_size({Term{2, 0}}, 2, 100));
}

TEST_CASE("the ideal annihilates E") {
  // Every element of I has zero convolution with E at every shift.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto G1 = buchberger(gen_random_system(2, 2, 65521, 40 + seed), Ordering::DRL);
    QuotientRing Q(G1);
    auto lex = classic_fglm(Q, Ordering::LEX);
    std::mt19937_64 rng(seed);
    ArrayE E(Q, fixtures::random_vector(Q.field(), Q.degree(), rng));
    for (const auto& g : lex.polys)
      for (Exponent a = 0; a < 5; ++a)
        for (Exponent b = 0; b < 5; ++b) {
          Elem acc = 0;
          for (const auto& [t, c] : g.terms()) acc = Q.field().fma(acc, c, E.value(t * Term{a, b}));
          CHECK(acc == 0);
        }
    auto res = bms_change(Q, {seed, std::nullopt, false});
    CHECK(res.passes <= res.pass_cap);
    if (res.basis) CHECK(*res.basis == lex);
  }
}
