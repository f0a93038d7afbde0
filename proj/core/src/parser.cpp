#include "acv/parser.hpp"

#include <cctype>

namespace acv {

namespace {

struct Cursor {
  const std::string &s;
  const Ring &ring;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
};

Poly<Rat> parse_poly(Cursor &c);

std::string read_digits(Cursor &c) {
  std::string d;
  while (c.i < c.s.size() &&
         std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    d += c.s[c.i++];
  return d;
}

Poly<Rat> parse_base(Cursor &c) {
  char ch = c.peek();
  QField q;
  std::size_t nv = c.ring.nvars();
  if (ch == '(') {
    ++c.i;
    Poly<Rat> inner = parse_poly(c);
    if (!c.eat(')')) throw ParseError("expected ')'", c.i);
    return inner;
  }
  if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
    std::size_t start = c.i;
    bool neg = c.eat('-');
    c.skip_ws();
    std::string num = read_digits(c);
    if (num.empty()) throw ParseError("expected number", c.i);
    std::string den = "1";
    if (c.peek() == '/') {
      ++c.i;
      c.skip_ws();
      den = read_digits(c);
      if (den.empty()) throw ParseError("expected denominator", c.i);
      if (Int(den) == 0) throw ParseError("zero denominator", start);
    }
    Rat v{Int(num), Int(den)};
    v.canonicalize();
    if (neg) v = -v;
    return constant_poly(q, nv, v);
  }
  if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
    std::size_t start = c.i;
    std::string id;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) ||
            c.s[c.i] == '_'))
      id += c.s[c.i++];
    int v = c.ring.index_of(id);
    if (v < 0) throw ParseError("unknown variable '" + id + "'", start);
    return var_poly(q, nv, static_cast<std::size_t>(v));
  }
  throw ParseError("unexpected character", c.i);
}

Poly<Rat> parse_factor(Cursor &c) {
  Poly<Rat> b = parse_base(c);
  if (c.peek() == '^') {
    ++c.i;
    c.skip_ws();
    std::size_t at = c.i;
    std::string d = read_digits(c);
    if (d.empty()) throw ParseError("expected exponent", at);
    unsigned long k = std::stoul(d);
    return poly_pow(b, static_cast<std::uint32_t>(k));
  }
  return b;
}

Poly<Rat> parse_term(Cursor &c) {
  Poly<Rat> f = parse_factor(c);
  while (c.peek() == '*') {
    ++c.i;
    f = f * parse_factor(c);
  }
  return f;
}

Poly<Rat> parse_poly(Cursor &c) {
  bool neg = false;
  if (c.peek() == '-') {
    ++c.i;
    neg = true;
  } else {
    c.eat('+');
  }
  Poly<Rat> f = parse_term(c);
  if (neg) f = -f;
  for (;;) {
    char ch = c.peek();
    if (ch == '+') {
      ++c.i;
      f = f + parse_term(c);
    } else if (ch == '-') {
      ++c.i;
      f = f - parse_term(c);
    } else {
      break;
    }
  }
  return f;
}

} // namespace

Poly<Rat> parse_polynomial(const std::string &text, const Ring &ring) {
  Cursor c{text, ring};
  Poly<Rat> f = parse_poly(c);
  c.skip_ws();
  if (c.i != text.size()) throw ParseError("trailing input", c.i);
  return f;
}

} // namespace acv
