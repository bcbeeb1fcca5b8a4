#include "vchow/io/parser.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace vchow::io {

using funcfield::FqPoly;

namespace {

// Position-tracking cursor over a slice of the document.
struct Cursor {
  std::string_view s;
  size_t i = 0;
  int line = 1;
  int col = 1;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) advance();
  }
  void advance() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void error(const std::string& what) { throw ParseError(what, line, col); }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'" + found());
    advance();
  }
  std::string found() {
    skip_ws();
    if (i >= s.size()) return ", found end of input";
    return std::string(", found '") + s[i] + "'";
  }
  uint64_t read_uint(uint64_t mod, uint64_t* raw_out = nullptr) {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) error("expected an integer" + found());
    uint64_t v = 0, raw = 0;
    bool overflow = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      const uint64_t d = static_cast<uint64_t>(s[i] - '0');
      v = mod ? (v * 10 + d) % mod : 0;
      if (raw > (UINT64_MAX - d) / 10) overflow = true;
      if (!overflow) raw = raw * 10 + d;
      advance();
    }
    if (raw_out) {
      if (overflow) error("integer too large");
      *raw_out = raw;
    }
    return v;
  }
};

// Recursive-descent evaluator over a value type V.
template <class V>
struct Evaluator {
  Cursor& c;
  uint32_t p;
  std::function<std::optional<V>(char)> symbol;  // variables and named constants
  std::function<V(uint64_t)> integer;
  std::function<V(const V&, const V&)> divide;

  V expr() {
    V acc = term();
    while (true) {
      const char ch = c.peek();
      if (ch == '+') {
        c.advance();
        acc = acc + term();
      } else if (ch == '-') {
        c.advance();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }
  V term() {
    V acc = factor();
    while (true) {
      const char ch = c.peek();
      if (ch == '*') {
        c.advance();
        acc = acc * factor();
      } else if (ch == '/') {
        c.advance();
        const int line = c.line, col = c.col;
        V d = factor();
        try {
          acc = divide(acc, d);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kDivisionByZero) throw ParseError("division by zero", line, col);
          throw;
        }
      } else {
        return acc;
      }
    }
  }
  V factor() {
    if (c.peek() == '-') {
      c.advance();
      return -factor();
    }
    V b = base();
    if (c.peek() == '^') {
      c.advance();
      uint64_t e = 0;
      const int line = c.line, col = c.col;
      c.read_uint(0, &e);
      if (e > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), line, col);
      b = b.pow(static_cast<int64_t>(e));
    }
    return b;
  }
  V base() {
    const char ch = c.peek();
    if (ch == '(') {
      c.advance();
      V v = expr();
      c.expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return integer(c.read_uint(p));
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      if (auto v = symbol(ch)) {
        c.advance();
        if (c.i < c.s.size() && std::isalnum(static_cast<unsigned char>(c.s[c.i])))
          c.error(std::string("unknown identifier starting with '") + ch + "'");
        return *v;
      }
      c.error(std::string("unknown symbol '") + ch + "'");
    }
    c.error("expected a number, a variable or '('" + c.found());
  }
};

RatFn eval_ratfn(Cursor& cur, const FiniteField& k) {
  Evaluator<RatFn> ev{cur, k.characteristic(), {}, {}, {}};
  ev.symbol = [&](char ch) -> std::optional<RatFn> {
    if (ch == 't') return RatFn::t(k);
    if (ch == 'g' && k.degree() > 1) return RatFn::constant(k.generator());
    return std::nullopt;
  };
  ev.integer = [&](uint64_t v) { return RatFn::constant(k.from_int(static_cast<int64_t>(v))); };
  ev.divide = [](const RatFn& a, const RatFn& b) { return a / b; };
  return ev.expr();
}

RatFn parse_full_ratfn(Cursor& cur, const FiniteField& k) {
  RatFn v = eval_ratfn(cur, k);
  if (!cur.at_end()) cur.error("unexpected input" + cur.found());
  return v;
}

struct Statement {
  std::string key;
  std::string_view value;
  int line, col;  // of the value
};

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&]() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    // Skip separators, whitespace and comments.
    if (is_space(text[i]) || text[i] == '\n' || text[i] == ';') {
      advance();
      continue;
    }
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    const int kline = line, kcol = col;
    std::string key;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      key += text[i];
      advance();
    }
    if (key.empty()) throw ParseError(std::string("unexpected character '") + text[i] + "'", line, col);
    while (i < text.size() && is_space(text[i])) advance();
    if (i >= text.size() || text[i] != '=') throw ParseError("expected '=' after '" + key + "'", line, col);
    advance();
    while (i < text.size() && is_space(text[i])) advance();
    const size_t start = i;
    const int vline = line, vcol = col;
    int depth = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '#') break;
      if (depth == 0 && (ch == ';' || ch == '\n')) break;
      if (ch == '[' || ch == '(') ++depth;
      if (ch == ']' || ch == ')') --depth;
      advance();
    }
    std::string_view value = text.substr(start, i - start);
    while (!value.empty() && is_space(value.back())) value.remove_suffix(1);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", kline, kcol);
    out.push_back({key, value, vline, vcol});
  }
  return out;
}

uint64_t parse_small_uint(const Statement& st) {
  Cursor c{st.value, 0, st.line, st.col};
  uint64_t v = 0;
  c.read_uint(0, &v);
  if (!c.at_end()) c.error("unexpected input" + c.found());
  return v;
}

}  // namespace

RatFn parse_ratfn(std::string_view text, const FiniteField& field) {
  Cursor c{text};
  return parse_full_ratfn(c, field);
}

ParsedCurve parse_curve(std::string_view text) {
  const auto statements = split_statements(text);
  const Statement* sp = nullptr;
  const Statement* sn = nullptr;
  const Statement* smod = nullptr;
  const Statement* sa = nullptr;
  for (const auto& st : statements) {
    const Statement** slot = nullptr;
    if (st.key == "p") slot = &sp;
    else if (st.key == "n") slot = &sn;
    else if (st.key == "modulus") slot = &smod;
    else if (st.key == "a") slot = &sa;
    else throw ParseError("unknown key '" + st.key + "'", st.line, st.col);
    if (*slot) throw ParseError("duplicate key '" + st.key + "'", st.line, st.col);
    *slot = &st;
  }
  if (!sp) throw ParseError("missing 'p'", 1, 1);
  if (!sa) throw ParseError("missing 'a'", 1, 1);
  ParsedCurve out;
  const uint64_t p = parse_small_uint(*sp);
  if (p < 2 || p > 65521 || !gf::is_prime(p)) throw ParseError("p must be a prime below 65536", sp->line, sp->col);
  out.spec.p = static_cast<uint32_t>(p);
  if (sn) {
    const uint64_t n = parse_small_uint(*sn);
    if (n < 1 || n > 20) throw ParseError("n must be between 1 and 20", sn->line, sn->col);
    out.spec.n = static_cast<unsigned>(n);
  }
  gf::BigInt order = 1;
  for (unsigned i = 0; i < out.spec.n; ++i) order *= p;
  if (order > gf::kMaxFieldOrder) fail(ErrorCode::kBoundExceeded, "constant field of order " + order.str() + " is too large");
  if (smod) {
    if (out.spec.n == 1) throw ParseError("'modulus' needs n > 1", smod->line, smod->col);
    // Parse as a polynomial in g over F_p.
    const FiniteField fp = FiniteField::prime(out.spec.p);
    Cursor c{smod->value, 0, smod->line, smod->col};
    Evaluator<FqPoly> ev{c, out.spec.p, {}, {}, {}};
    ev.symbol = [&](char ch) -> std::optional<FqPoly> {
      if (ch == 'g') return funcfield::variable(fp);
      return std::nullopt;
    };
    ev.integer = [&](uint64_t v) { return FqPoly::constant(fp.from_int(static_cast<int64_t>(v))); };
    ev.divide = [&](const FqPoly& a, const FqPoly& b) {
      if (b.degree() != 0) c.error("modulus may only divide by constants");
      return a * b.lc().inv();
    };
    const FqPoly m = ev.expr();
    if (!c.at_end()) c.error("unexpected input" + c.found());
    if (m.degree() != static_cast<int>(out.spec.n) || !m.lc().is_one())
      throw ParseError("modulus must be monic of degree n", smod->line, smod->col);
    if (!funcfield::is_irreducible(m)) throw ParseError("modulus is not irreducible", smod->line, smod->col);
    std::vector<int64_t> ints;
    std::vector<uint32_t> raw;
    for (const auto& co : m.coeffs()) {
      ints.push_back(co.index());
      raw.push_back(co.index());
    }
    out.spec.modulus = ints;
    out.field = FiniteField::with_modulus(out.spec.p, raw);
  } else {
    out.field = out.spec.n == 1 ? FiniteField::prime(out.spec.p) : FiniteField::make(out.spec.p, out.spec.n);
  }
  // a = [e1, ..., e5]
  Cursor c{sa->value, 0, sa->line, sa->col};
  c.expect('[');
  std::array<RatFn, 5> a;
  for (int i = 0; i < 5; ++i) {
    if (i > 0) c.expect(',');
    a[i] = eval_ratfn(c, out.field);
  }
  if (c.peek() == ',') c.error("'a' must have exactly five entries");
  c.expect(']');
  if (!c.at_end()) c.error("unexpected input after ']'" + c.found());
  out.curve = curve::make_curve(a);
  for (int i = 0; i < 5; ++i) out.spec.a[i] = a[i].to_string();
  return out;
}

ParsedCurve load_curve_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot read curve file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve(ss.str());
}

Place parse_place(std::string_view text, const FiniteField& field) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "inf") return Place::infinity(field);
  const RatFn x = parse_ratfn(s, field);
  if (!x.is_polynomial() || x.num().degree() < 1)
    fail(ErrorCode::kInvalidArgument, "place must be a nonconstant polynomial in t or 'inf'");
  if (!x.num().lc().is_one()) fail(ErrorCode::kInvalidArgument, "place polynomial " + x.to_string() + " is not monic");
  return Place::finite(x.num());
}

RatPoly parse_kernel(std::string_view text, const FiniteField& field) {
  Cursor c{text};
  const RatFn one = RatFn::constant(field.one());
  Evaluator<RatPoly> ev{c, field.characteristic(), {}, {}, {}};
  ev.symbol = [&](char ch) -> std::optional<RatPoly> {
    if (ch == 'x') return RatPoly::x(one);
    if (ch == 't') return RatPoly::constant(RatFn::t(field));
    if (ch == 'g' && field.degree() > 1) return RatPoly::constant(RatFn::constant(field.generator()));
    return std::nullopt;
  };
  ev.integer = [&](uint64_t v) { return RatPoly::constant(RatFn::constant(field.from_int(static_cast<int64_t>(v)))); };
  ev.divide = [&](const RatPoly& a, const RatPoly& b) {
    if (b.degree() != 0) c.error("kernel polynomials may only divide by expressions free of x");
    return a * b.lc().inv();
  };
  RatPoly h = ev.expr();
  if (!c.at_end()) c.error("unexpected input" + c.found());
  if (h.is_zero()) fail(ErrorCode::kInvalidArgument, "kernel polynomial is zero");
  return h;
}

namespace {

std::string factored_poly(const FqPoly& f, bool* compound) {
  const auto fac = funcfield::factor(f);
  std::vector<std::string> parts;
  if (!fac.unit.is_one() || fac.factors.empty()) {
    std::string u = fac.unit.to_string();
    if (u.find_first_of("+-", 1) != std::string::npos) u = "(" + u + ")";
    parts.push_back(u);
  }
  for (const auto& fc : fac.factors) {
    std::string s = funcfield::poly_text(fc.poly);
    const bool atom = s.find_first_of("+-*") == std::string::npos;
    if (!atom && (fc.multiplicity > 1 || fac.factors.size() > 1 || parts.size() > 0)) s = "(" + s + ")";
    if (fc.multiplicity > 1) s += "^" + std::to_string(fc.multiplicity);
    parts.push_back(s);
  }
  if (parts.size() >= 2 && parts[0] == "-1") {
    parts.erase(parts.begin());
    parts[0] = "-" + parts[0];
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  *compound = parts.size() > 1 || (out[0] != '(' && out.find_first_of("+-", 1) != std::string::npos);
  return out;
}

}  // namespace

std::string factored_text(const RatFn& x) {
  if (x.is_zero()) return "0";
  bool nc = false, dc = false;
  std::string num = factored_poly(x.num(), &nc);
  if (x.is_polynomial()) return num;
  std::string den = factored_poly(x.den(), &dc);
  if (nc) num = "(" + num + ")";
  if (dc) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace vchow::io
