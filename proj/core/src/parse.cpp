#include "glab/parse.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "glab/error.hpp"

namespace glab {

namespace {

constexpr int64_t kMaxExponent = 100000;

struct Mono {
  FqElem c;
  int64_t inner = 0;
  int64_t outer = 0;
};

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw error(errc::syntax_error, msg, at);
  }
  int64_t number() {
    skip();
    std::size_t start = pos;
    int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > kMaxExponent * kMaxExponent) fail("number too large", start);
      ++pos;
    }
    if (pos == start) fail("expected a number", start);
    return v;
  }
  std::string name() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
};

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx, bool allow_outer)
      : lex_{text}, ctx_(ctx), allow_outer_(allow_outer) {
    if (!ctx.field) throw error(errc::unsupported, "parse context has no field");
  }

  std::vector<Mono> run() {
    std::vector<Mono> out;
    bool negate = false;
    if (lex_.peek() == '-') {
      ++lex_.pos;
      negate = true;
    }
    out.push_back(term(negate));
    while (!lex_.done()) {
      char c = lex_.peek();
      if (c == '+' || c == '-') {
        ++lex_.pos;
        out.push_back(term(c == '-'));
      } else {
        lex_.fail("expected '+' or '-'", lex_.pos);
      }
    }
    return out;
  }

 private:
  Mono term(bool negate) {
    Mono m{ctx_.field->one(), 0, 0};
    factor(m);
    while (lex_.peek() == '*') {
      ++lex_.pos;
      factor(m);
    }
    if (negate) m.c = m.c * ctx_.field->from_int(-1);
    return m;
  }

  void factor(Mono& m) {
    char c = lex_.peek();
    std::size_t at = lex_.pos;
    int64_t e = 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int64_t v = lex_.number();
      e = exponent();
      FqElem base = ctx_.field->from_int(v);
      m.c = m.c * power(base, e, at);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string n = lex_.name();
      e = exponent();
      if (e > kMaxExponent) lex_.fail("exponent too large", at);
      if (n == ctx_.inner) {
        m.inner += e;
      } else if (!ctx_.outer.empty() && n == ctx_.outer) {
        if (!allow_outer_)
          lex_.fail("variable '" + n + "' is not allowed in this context", at);
        m.outer += e;
      } else if (!ctx_.gen.empty() && n == ctx_.gen) {
        m.c = m.c * power(ctx_.field->generator(), e, at);
      } else {
        throw error(errc::unknown_generator,
                    "'" + n + "' is not a declared variable or F_q* generator", at);
      }
      return;
    }
    lex_.fail("expected a coefficient or variable", at);
  }

  int64_t exponent() {
    if (lex_.peek() != '^') return 1;
    ++lex_.pos;
    std::size_t at = lex_.pos;
    int64_t e = lex_.number();
    if (e > kMaxExponent) lex_.fail("exponent too large", at);
    return e;
  }

  FqElem power(FqElem base, int64_t e, std::size_t at) {
    if (e > kMaxExponent) lex_.fail("exponent too large", at);
    return base.pow(static_cast<uint64_t>(e));
  }

  Lexer lex_;
  const ParseContext& ctx_;
  bool allow_outer_;
};

Poly<Poly<FqElem>> assemble(const std::vector<Mono>& monos, const FqFieldPtr& field) {
  std::map<int64_t, std::map<int64_t, FqElem>> grid;
  for (const auto& m : monos) {
    auto& cell = grid[m.outer];
    auto it = cell.find(m.inner);
    if (it == cell.end())
      cell.emplace(m.inner, m.c);
    else
      it->second = it->second + m.c;
  }
  int64_t top = grid.empty() ? -1 : grid.rbegin()->first;
  std::vector<Poly<FqElem>> rows;
  for (int64_t k = 0; k <= top; ++k) {
    auto it = grid.find(k);
    if (it == grid.end()) {
      rows.emplace_back();
      continue;
    }
    int64_t deg = it->second.empty() ? -1 : it->second.rbegin()->first;
    std::vector<FqElem> cs;
    for (int64_t j = 0; j <= deg; ++j) {
      auto jt = it->second.find(j);
      cs.push_back(jt == it->second.end() ? field->zero() : jt->second);
    }
    rows.emplace_back(std::move(cs));
  }
  return Poly<Poly<FqElem>>(std::move(rows));
}

/// Discrete log of c in <generator>; fields here are tiny so a scan is fine.
int64_t gen_power(const FqElem& c) {
  FqElem g = c.field()->generator();
  FqElem acc = c.field()->one();
  for (uint64_t e = 0; e < c.field()->q(); ++e) {
    if (acc == c) return static_cast<int64_t>(e);
    acc = acc * g;
  }
  throw error(errc::unsupported, "element outside the multiplicative group");
}

std::string coeff_str(const FqElem& c, const ParseContext& ctx) {
  const auto& cs = c.coeffs();
  bool prime_field = true;
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (cs[i] != 0) prime_field = false;
  if (prime_field) return std::to_string(cs[0]);
  std::string gen = ctx.gen.empty() ? "a" : ctx.gen;
  int64_t e = gen_power(c);
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

std::string var_str(const std::string& v, int64_t e) {
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

void append_term(std::string& out, const FqElem& c, int64_t outer_e, int64_t inner_e,
                 const ParseContext& ctx) {
  std::vector<std::string> parts;
  if (!c.is_one() || (outer_e == 0 && inner_e == 0)) parts.push_back(coeff_str(c, ctx));
  if (outer_e > 0) parts.push_back(var_str(ctx.outer, outer_e));
  if (inner_e > 0) parts.push_back(var_str(ctx.inner, inner_e));
  if (!out.empty()) out += " + ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
}

}  // namespace

Poly<Poly<FqElem>> parse_bivariate(const std::string& text, const ParseContext& ctx) {
  Parser p(text, ctx, true);
  return assemble(p.run(), ctx.field);
}

Poly<FqElem> parse_univariate(const std::string& text, const ParseContext& ctx) {
  Parser p(text, ctx, false);
  auto monos = p.run();
  auto big = assemble(monos, ctx.field);
  if (big.degree() > 0)
    throw error(errc::syntax_error, "expected a univariate polynomial");
  if (big.is_zero()) return Poly<FqElem>();
  return big[0];
}

std::string poly_str(const Poly<FqElem>& p, const ParseContext& ctx) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    const FqElem& c = p[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    append_term(out, c, 0, j, ctx);
  }
  return out;
}

std::string poly_str(const Poly<Poly<FqElem>>& p, const ParseContext& ctx) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Poly<FqElem>& row = p[static_cast<std::size_t>(k)];
    for (int j = row.degree(); j >= 0; --j) {
      const FqElem& c = row[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      append_term(out, c, k, j, ctx);
    }
  }
  return out;
}

std::string poly_str_signed(const Poly<BigInt>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    BigInt c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (c != 1 || k == 0) {
      os << c;
      if (k > 0) os << "*";
    }
    if (k >= 2)
      os << var << "^" << k;
    else if (k == 1)
      os << var;
  }
  return os.str();
}

}  // namespace glab
