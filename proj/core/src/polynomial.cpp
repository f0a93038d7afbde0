#include "acv/polynomial.hpp"

#include <sstream>

namespace acv {

Poly<Rat> normalize_integer(const Poly<Rat> &f) {
  if (f.is_zero()) return f;
  Int den = 1;
  for (const auto &t : f.terms) {
    Int d = t.c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  Int content = 0;
  for (const auto &t : f.terms) {
    Rat s = t.c * den;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            s.get_num().get_mpz_t());
  }
  // canonical storage leads with the grevlex-top term
  Rat unit = Rat(den) / content;
  if (f.terms[0].c < 0) unit = -unit;
  Poly<Rat> r = f;
  for (auto &t : r.terms) {
    t.c *= unit;
    t.c.canonicalize();
  }
  return r;
}

Poly<Fp> to_prime_field(const FpField &field, const Poly<Rat> &f) {
  Poly<Fp> r(f.nv);
  r.terms.reserve(f.terms.size());
  for (const auto &t : f.terms) {
    Fp c = field.from_rat(t.c);
    if (!c.is_zero()) r.terms.push_back({t.m, c});
  }
  normalize_terms(r);
  return r;
}

Poly<Rat> poly_from_int_terms(const Poly<Int> &f) {
  Poly<Rat> r(f.nv);
  r.terms.reserve(f.terms.size());
  for (const auto &t : f.terms) r.terms.push_back({t.m, Rat(t.c)});
  normalize_terms(r);
  return r;
}

namespace {

template <class K, class CoeffStr>
std::string render_impl(const Poly<K> &f, const Ring &ring, CoeffStr cstr,
                        bool (*is_neg)(const K &), K (*negate)(const K &),
                        bool (*is_unit_one)(const K &)) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : f.terms) {
    K c = t.c;
    if (first) {
      if (is_neg(c)) {
        os << "-";
        c = negate(c);
      }
    } else {
      if (is_neg(c)) {
        os << " - ";
        c = negate(c);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool wrote = false;
    if (!is_unit_one(c) || t.m.is_one()) {
      os << cstr(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < f.nv; ++i) {
      if (!t.m.e[i]) continue;
      if (wrote) os << "*";
      os << ring.names[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      wrote = true;
    }
  }
  return os.str();
}

bool rat_neg(const Rat &c) { return c < 0; }
Rat rat_negate(const Rat &c) { return -c; }
bool rat_one(const Rat &c) { return c == 1; }
bool fp_neg(const Fp &) { return false; }
Fp fp_negate(const Fp &c) { return c; }
bool fp_one(const Fp &c) { return c.v == 1; }

} // namespace

std::string render(const Poly<Rat> &f, const Ring &ring) {
  return render_impl<Rat>(
      f, ring, [](const Rat &c) { return c.get_str(); }, rat_neg, rat_negate,
      rat_one);
}

std::string render(const Poly<Fp> &f, const Ring &ring) {
  return render_impl<Fp>(
      f, ring, [](const Fp &c) { return std::to_string(c.v); }, fp_neg,
      fp_negate, fp_one);
}

} // namespace acv
