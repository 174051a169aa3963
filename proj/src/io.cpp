#include "sfglm/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "sfglm/errors.hpp"

namespace sfglm {

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, line_, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::uint64_t integer() {
    skip_ws();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec == std::errc::result_out_of_range) fail("integer too large");
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  MultiPoly polynomial(const PrimeField& F, std::size_t nvars, Ordering ord) {
    std::vector<MultiPoly::Entry> entries;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      auto [t, c] = monomial(F, nvars);
      entries.emplace_back(std::move(t), negate ? F.neg(c) : c);
      if (at_end()) break;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else fail(std::string("unexpected character '") + peek() + "'");
    }
    return MultiPoly::from_terms(F, nvars, ord, std::move(entries));
  }

 private:
  MultiPoly::Entry monomial(const PrimeField& F, std::size_t nvars) {
    Elem coeff = 1;
    Term t(nvars);
    bool any = false;
    do {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t v = integer();
        if (v >= F.modulus()) fail("coefficient " + std::to_string(v) + " is not below p = " + std::to_string(F.modulus()));
        coeff = F.mul(coeff, static_cast<Elem>(v));
      } else if (c == 'x') {
        ++pos_;
        std::size_t at = pos_;
        std::uint64_t idx = integer();
        if (idx == 0 || idx > nvars) {
          pos_ = at;
          fail("variable index " + std::to_string(idx) + " out of range 1.." + std::to_string(nvars));
        }
        std::uint64_t e = 1;
        if (accept('^')) e = integer();
        if (e > 0xFFFFFFFFull - t[idx - 1]) fail("exponent too large");
        t[idx - 1] += static_cast<Exponent>(e);
      } else if (c == '\0') {
        fail("expected a monomial");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
    } while (accept('*'));
    if (!any) fail("expected a monomial");
    return {std::move(t), coeff};
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

PolySystem parse_system(std::string_view text, Ordering ord) {
  std::optional<PrimeField> field;
  std::optional<std::size_t> nvars;
  std::vector<MultiPoly> polys;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    ++lineno;
    start = end + 1;
    if (blank(line)) continue;
    LineParser lp(line, lineno);
    if (!field) {
      if (lp.word() != "p") lp.fail("expected header 'p <modulus>'");
      std::uint64_t p = lp.integer();
      if (!lp.at_end()) lp.fail("trailing characters after modulus");
      if (p >= (1ull << 31)) lp.fail("modulus must be below 2^31");
      if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime", lineno, 1);
      field.emplace(static_cast<std::uint32_t>(p));
    } else if (!nvars) {
      if (lp.word() != "vars") lp.fail("expected header 'vars <n>'");
      std::uint64_t n = lp.integer();
      if (!lp.at_end()) lp.fail("trailing characters after variable count");
      if (n == 0 || n > 64) lp.fail("variable count must be in 1..64");
      nvars = static_cast<std::size_t>(n);
    } else {
      polys.push_back(lp.polynomial(*field, *nvars, ord));
    }
  }
  if (!field) throw InputError("missing 'p <modulus>' header");
  if (!nvars) throw InputError("missing 'vars <n>' header");
  if (polys.empty()) throw InputError("empty polynomial list");
  return PolySystem{*field, *nvars, std::move(polys)};
}

MultiPoly parse_poly(std::string_view text, const PrimeField& field, std::size_t nvars, Ordering ord) {
  LineParser lp(strip_comment(text), 1);
  if (lp.at_end()) lp.fail("empty polynomial");
  return lp.polynomial(field, nvars, ord);
}

std::string format_system(const PrimeField& field, std::size_t nvars, std::span<const MultiPoly> polys) {
  std::string out = "p " + std::to_string(field.modulus()) + "\nvars " + std::to_string(nvars) + "\n";
  for (const auto& f : polys) out += f.to_string() + "\n";
  return out;
}

}  // namespace sfglm
