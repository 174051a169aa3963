#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "sfglm/bms.hpp"
#include "sfglm/errors.hpp"
#include "sfglm/fglm.hpp"
#include "sfglm/generic.hpp"
#include "sfglm/groebner.hpp"
#include "sfglm/io.hpp"
#include "sfglm/shape.hpp"

using namespace sfglm;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kFail = 2, kInput = 3, kInternal = 4;

struct Common {
  std::string in = "-", out = "-", format = "text";
  std::uint64_t seed = 0;
  bool trace = false;
  std::string probe;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::optional<CoordVector> parse_probe(const std::string& s) {
  if (s.empty()) return std::nullopt;
  CoordVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long x = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(static_cast<Elem>(x));
    } catch (const std::exception&) {
      throw InputError("bad probe entry '" + item + "'");
    }
  }
  return v;
}

std::vector<std::size_t> parse_list(const std::string& s, const char* what) {
  std::vector<std::size_t> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw InputError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (v.empty()) throw InputError(std::string("empty ") + what + " list");
  return v;
}

// Input file to a reduced DRL basis, running Buchberger on whatever was given.
GroebnerBasis load_basis(const Common& c) {
  auto sys = parse_system(read_input(c.in), Ordering::DRL);
  return buchberger(sys.polys, Ordering::DRL);
}

json basis_json(const GroebnerBasis& G) {
  json a = json::array();
  for (const auto& g : G.polys) a.push_back(g.to_string());
  return a;
}

std::string basis_text(const GroebnerBasis& G) {
  return format_system(G.polys.front().field(), G.polys.front().nvars(), G.polys);
}

json report_json(const RunReport& r) {
  json j;
  j["method_used"] = to_string(r.method_used);
  j["of_what"] = to_string(r.of_what);
  j["D"] = r.D;
  j["nnz"] = r.nnz;
  j["density"] = r.density;
  j["passes"] = r.passes;
  j["wall_time"] = r.wall_time;
  j["seed"] = r.seed;
  j["basis_size"] = r.basis_size;
  j["max_terms"] = r.max_terms;
  j["stages"] = r.stages;
  j["basis"] = basis_json(r.basis);
  return j;
}

int emit_report(const Common& c, const RunReport& r) {
  if (c.format == "json") write_output(c.out, report_json(r).dump(2) + "\n");
  else write_output(c.out, basis_text(r.basis));
  return kOk;
}

int emit_fail(const Common& c, const std::string& method, const std::string& why, json extra = json::object()) {
  if (c.format == "json") {
    json j{{"method_used", method}, {"status", "fail"}, {"reason", why}, {"seed", c.seed}};
    j.update(extra);
    write_output(c.out, j.dump(2) + "\n");
  } else {
    std::cerr << method << ": fail: " << why << "\n";
  }
  return kFail;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunReport stage_report(const QuotientRing& Q, const Common& c, Method m, OfWhat w, GroebnerBasis G,
                       std::chrono::steady_clock::time_point t0) {
  RunReport r;
  r.method_used = m;
  r.of_what = w;
  r.seed = c.seed;
  r.basis = std::move(G);
  fill_statistics(r, Q);
  r.wall_time = seconds_since(t0);
  return r;
}

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
  if (with_input) sub->add_option("--in", c.in, "input system file, - for stdin");
  sub->add_option("--out", c.out, "output file, - for stdout");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse change of ordering for zero-dimensional Groebner bases"};
  app.require_subcommand(1);
  Common c;
  bool radical_ok = true;
  std::string target = "lex", ns = "2", ds = "2";
  std::uint32_t p = 65521;
  std::size_t count = 5, var = 0, window = 2;
  bool random_probes = false;

  auto* convert = app.add_subcommand("convert", "DRL to LEX through the full cascade");
  add_common(convert, c);
  convert->add_option("--radical-ok", radical_ok, "accept a basis of the radical");
  convert->add_option("--probe", c.probe, "comma separated probe vector");
  auto* sprob = app.add_subcommand("shape-prob", "probabilistic shape position");
  add_common(sprob, c);
  sprob->add_option("--probe", c.probe, "comma separated probe vector");
  auto* sdet = app.add_subcommand("shape-det", "deterministic shape position, basis of the radical");
  add_common(sdet, c);
  sdet->add_flag("--random-probes", random_probes, "random probes instead of unit vectors");
  auto* univar = app.add_subcommand("univar", "incremental minimal polynomial of T1");
  add_common(univar, c);
  univar->add_option("--window", window, "stability window")->check(CLI::PositiveNumber);
  auto* bms = app.add_subcommand("bms", "BMS based conversion to LEX");
  add_common(bms, c);
  bms->add_flag("--trace", c.trace, "print one line per pass to stderr");
  bms->add_option("--probe", c.probe, "comma separated probe vector");
  auto* fglm = app.add_subcommand("fglm", "classic FGLM");
  add_common(fglm, c);
  fglm->add_option("--target", target, "lex or drl")->check(CLI::IsMember({"lex", "drl"}));
  auto* matrices = app.add_subcommand("matrices", "dump multiplication matrices");
  add_common(matrices, c);
  matrices->add_option("--var", var, "1-based variable, 0 for all");
  auto* analyze = app.add_subcommand("analyze", "generic sparsity analysis as CSV");
  add_common(analyze, c, false);
  analyze->add_option("--n", ns, "comma separated variable counts");
  analyze->add_option("--d", ds, "comma separated degrees");
  auto* gen = app.add_subcommand("gen", "random dense system");
  add_common(gen, c, false);
  gen->add_option("--n", ns, "variables");
  gen->add_option("--d", ds, "degree");
  gen->add_option("--p", p, "prime modulus");
  auto* bench = app.add_subcommand("bench", "run the cascade on random systems");
  add_common(bench, c, false);
  bench->add_option("--n", ns, "comma separated variable counts");
  bench->add_option("--d", ds, "comma separated degrees");
  bench->add_option("--p", p, "prime modulus");
  bench->add_option("--count", count, "systems per (n, d)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    if (*convert) {
      QuotientRing Q(load_basis(c));
      ToplevelOptions o;
      o.seed = c.seed;
      o.want_radical_ok = radical_ok;
      o.probe = parse_probe(c.probe);
      return emit_report(c, toplevel(Q, o));
    }
    if (*sprob) {
      QuotientRing Q(load_basis(c));
      auto res = shape_prob(Q, {c.seed, parse_probe(c.probe)});
      if (!res.basis)
        return emit_fail(c, "shape-prob", "minimal polynomial " + res.minpoly.to_string() + " has degree below D = " +
                                              std::to_string(Q.degree()));
      return emit_report(c, stage_report(Q, c, Method::ShapeProb, OfWhat::Ideal, res.basis->to_groebner(), t0));
    }
    if (*sdet) {
      QuotientRing Q(load_basis(c));
      auto res = shape_det(Q, {random_probes, c.seed});
      if (!res.basis)
        return emit_fail(c, "shape-det", "not in shape position: f1 = " + res.f1.to_string());
      return emit_report(c, stage_report(Q, c, Method::ShapeDet, res.is_radical ? OfWhat::Ideal : OfWhat::Radical,
                                         res.basis->to_groebner(), t0));
    }
    if (*univar) {
      QuotientRing Q(load_basis(c));
      auto res = incremental_univariate(Q, c.seed, window);
      if (c.format == "json")
        write_output(c.out, json{{"poly", res.poly.to_string()}, {"steps", res.steps},
                                 {"sequence_length", res.sequence_length}, {"D", Q.degree()}, {"seed", c.seed}}
                                    .dump(2) +
                                "\n");
      else write_output(c.out, res.poly.to_string() + "\n");
      return kOk;
    }
    if (*bms) {
      QuotientRing Q(load_basis(c));
      BmsOptions o;
      o.seed = c.seed;
      o.probe = parse_probe(c.probe);
      auto res = bms_change(Q, o);
      if (c.trace)
        for (const auto& line : res.trace) std::cerr << line << "\n";
      if (!res.basis)
        return emit_fail(c, "bms", "is_gb rejected the final set after " + std::to_string(res.passes) + " passes",
                         json{{"passes", res.passes}, {"D", Q.degree()}});
      auto r = stage_report(Q, c, Method::Bms, OfWhat::Ideal, std::move(*res.basis), t0);
      r.passes = res.passes;
      return emit_report(c, r);
    }
    if (*fglm) {
      QuotientRing Q(load_basis(c));
      auto G = classic_fglm(Q, target == "lex" ? Ordering::LEX : Ordering::DRL);
      return emit_report(c, stage_report(Q, c, Method::Fglm, OfWhat::Ideal, std::move(G), t0));
    }
    if (*matrices) {
      QuotientRing Q(load_basis(c));
      if (var > Q.nvars()) throw InputError("--var out of range");
      std::ostringstream os;
      for (std::size_t i = 0; i < Q.nvars(); ++i)
        if (var == 0 || var == i + 1) Q.matrix(i).dump(os, Q.nvars(), i);
      write_output(c.out, os.str());
      return kOk;
    }
    if (*analyze) {
      std::ostringstream os;
      os << "n,d,D,k0,m0,density_bound,asymptotic,ratio\n";
      for (std::size_t n : parse_list(ns, "n"))
        for (std::size_t d : parse_list(ds, "d")) {
          if (n == 0 || d == 0) throw InputError("n and d must be positive");
          auto h = hilbert_profile(n, d);
          const double est = asymptotic_estimate(n, d);
          os << n << ',' << d << ',' << h.ideal_degree << ',' << h.k0 << ',' << h.m0 << ','
             << density_bound(n, d).convert_to<double>() << ',' << est << ',' << est / h.m0.convert_to<double>()
             << "\n";
        }
      write_output(c.out, os.str());
      return kOk;
    }
    if (*gen) {
      const auto n = parse_list(ns, "n").front(), d = parse_list(ds, "d").front();
      write_output(c.out, format_system(PrimeField(p), n, gen_random_system(n, d, p, c.seed)));
      return kOk;
    }
    if (*bench) {
      json runs = json::array();
      std::ostringstream text;
      text << "n,d,seed,D,method,of_what,passes,nnz,wall_time\n";
      for (std::size_t n : parse_list(ns, "n"))
        for (std::size_t d : parse_list(ds, "d"))
          for (std::size_t k = 0; k < count; ++k) {
            const std::uint64_t seed = c.seed + k;
            QuotientRing Q(buchberger(gen_random_system(n, d, p, seed), Ordering::DRL));
            ToplevelOptions o;
            o.seed = seed;
            auto r = toplevel(Q, o);
            text << n << ',' << d << ',' << seed << ',' << r.D << ',' << to_string(r.method_used) << ','
                 << to_string(r.of_what) << ',' << r.passes << ',' << r.nnz << ',' << r.wall_time << "\n";
            json j = report_json(r);
            j.erase("basis");
            j["n"] = n;
            j["d"] = d;
            runs.push_back(j);
          }
      write_output(c.out, c.format == "json" ? runs.dump(2) + "\n" : text.str());
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const StructuralError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
