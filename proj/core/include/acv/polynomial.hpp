#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "acv/field.hpp"
#include "acv/monomial.hpp"
#include "acv/order.hpp"

namespace acv {

/// Ordered ambient variable list shared by all polynomials of a computation.
struct Ring {
  std::vector<std::string> names;

  std::size_t nvars() const { return names.size(); }
  int index_of(const std::string &name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }
};

template <class K> struct Term {
  Monomial m;
  K c;
};

/// Sparse multivariate polynomial. Terms are kept sorted in descending
/// grevlex so equal polynomials compare equal termwise.
template <class K> struct Poly {
  std::size_t nv = 0;
  std::vector<Term<K>> terms; // sorted desc grevlex, no zero coefficients

  Poly() = default;
  explicit Poly(std::size_t nvars) : nv(nvars) {}

  bool is_zero() const { return terms.empty(); }
  std::size_t nvars() const { return nv; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto &t : terms) d = std::max(d, t.m.degree());
    return d;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto &t : terms) d = std::max(d, t.m.e[var]);
    return d;
  }
  bool depends_on(std::size_t var) const {
    for (const auto &t : terms)
      if (t.m.e[var]) return true;
    return false;
  }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms[0].m.is_one());
  }

  friend bool operator==(const Poly &a, const Poly &b) {
    if (a.nv != b.nv || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].m == b.terms[i].m) || !(a.terms[i].c == b.terms[i].c))
        return false;
    return true;
  }
};

namespace detail {
inline const MonomialOrder &canonical_order(std::size_t nv) {
  thread_local std::unordered_map<std::size_t, MonomialOrder> cache;
  auto it = cache.find(nv);
  if (it == cache.end())
    it = cache.emplace(nv, MonomialOrder::grevlex(nv)).first;
  return it->second;
}
} // namespace detail

/// Sorts, merges duplicate monomials and drops zero coefficients.
template <class K> void normalize_terms(Poly<K> &f) {
  const MonomialOrder &ord = detail::canonical_order(f.nv);
  std::sort(f.terms.begin(), f.terms.end(),
            [&](const Term<K> &a, const Term<K> &b) {
              return ord.greater(a.m, b.m);
            });
  std::vector<Term<K>> out;
  out.reserve(f.terms.size());
  for (auto &t : f.terms) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && is_zero(out.back().c)) out.pop_back();
  }
  f.terms = std::move(out);
}

template <class K>
Poly<K> poly_from_terms(std::size_t nv, std::vector<Term<K>> terms) {
  Poly<K> f(nv);
  f.terms = std::move(terms);
  normalize_terms(f);
  return f;
}

template <class K> Poly<K> operator-(const Poly<K> &f) {
  Poly<K> r = f;
  for (auto &t : r.terms) t.c = -t.c;
  return r;
}

template <class K> Poly<K> operator+(const Poly<K> &a, const Poly<K> &b) {
  if (a.nv != b.nv) throw DomainError("polynomial arity mismatch");
  const MonomialOrder &ord = detail::canonical_order(a.nv);
  Poly<K> r(a.nv);
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = ord.compare(a.terms[i].m, b.terms[j].m);
    if (c > 0)
      r.terms.push_back(a.terms[i++]);
    else if (c < 0)
      r.terms.push_back(b.terms[j++]);
    else {
      K s = a.terms[i].c + b.terms[j].c;
      if (!is_zero(s)) r.terms.push_back({a.terms[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

template <class K> Poly<K> operator-(const Poly<K> &a, const Poly<K> &b) {
  return a + (-b);
}

/// f * (c * m)
template <class K>
Poly<K> mul_term(const Poly<K> &f, const Monomial &m, const K &c) {
  Poly<K> r(f.nv);
  if (is_zero(c)) return r;
  r.terms.reserve(f.terms.size());
  for (const auto &t : f.terms) {
    K p = t.c * c;
    if (!is_zero(p)) r.terms.push_back({mono_mul(t.m, m), p});
  }
  return r;
}

template <class K> Poly<K> scale(const Poly<K> &f, const K &c) {
  return mul_term(f, Monomial(f.nv), c);
}

template <class K> Poly<K> operator*(const Poly<K> &a, const Poly<K> &b) {
  if (a.nv != b.nv) throw DomainError("polynomial arity mismatch");
  Poly<K> r(a.nv);
  if (a.is_zero() || b.is_zero()) return r;
  std::unordered_map<Monomial, K, MonomialHash> acc;
  acc.reserve(a.terms.size() * b.terms.size());
  for (const auto &s : a.terms)
    for (const auto &t : b.terms) {
      Monomial m = mono_mul(s.m, t.m);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), s.c * t.c);
      else
        it->second += s.c * t.c;
    }
  r.terms.reserve(acc.size());
  for (auto &kv : acc)
    if (!is_zero(kv.second)) r.terms.push_back({kv.first, kv.second});
  normalize_terms(r);
  return r;
}

template <class K> Poly<K> poly_pow(const Poly<K> &f, std::uint32_t k) {
  if (k == 0) {
    // empty product; only well defined when f is nonzero so a unit exists
    if (f.is_zero()) throw DomainError("0^0 for polynomials");
    K one = f.terms[0].c / f.terms[0].c;
    Poly<K> r(f.nv);
    r.terms.push_back({Monomial(f.nv), one});
    return r;
  }
  Poly<K> r = f;
  for (std::uint32_t i = 1; i < k; ++i) r = r * f;
  return r;
}

template <class K> Poly<K> derivative(const Poly<K> &f, std::size_t var) {
  Poly<K> r(f.nv);
  for (const auto &t : f.terms) {
    std::uint32_t e = t.m.e[var];
    if (!e) continue;
    Term<K> s = t;
    s.m.e[var] -= 1;
    // multiply coefficient by e via repeated addition-free path
    K c = t.c;
    K acc = c;
    for (std::uint32_t i = 1; i < e; ++i) acc += c;
    s.c = acc;
    if (!is_zero(s.c)) r.terms.push_back(std::move(s));
  }
  normalize_terms(r);
  return r;
}

template <class F>
typename F::Elem eval(const F &field, const Poly<typename F::Elem> &f,
                      const std::vector<typename F::Elem> &pt) {
  if (pt.size() != f.nv) throw DomainError("evaluation point arity mismatch");
  typename F::Elem acc = field.zero();
  for (const auto &t : f.terms) {
    typename F::Elem v = t.c;
    for (std::size_t i = 0; i < f.nv; ++i)
      for (std::uint32_t k = 0; k < t.m.e[i]; ++k) v = v * pt[i];
    acc = acc + v;
  }
  return acc;
}

template <class F>
Poly<typename F::Elem> constant_poly(const F &, std::size_t nv,
                                     const typename F::Elem &c) {
  Poly<typename F::Elem> r(nv);
  if (!is_zero(c)) r.terms.push_back({Monomial(nv), c});
  return r;
}

template <class F>
Poly<typename F::Elem> var_poly(const F &field, std::size_t nv,
                                std::size_t var) {
  Poly<typename F::Elem> r(nv);
  Monomial m(nv);
  m.e[var] = 1;
  r.terms.push_back({m, field.one()});
  return r;
}

/// Remaps a polynomial into a larger (or differently arranged) ambient;
/// `where[i]` is the index of old variable i in the new ambient.
template <class K>
Poly<K> remap_vars(const Poly<K> &f, std::size_t new_nv,
                   const std::vector<int> &where) {
  Poly<K> r(new_nv);
  r.terms.reserve(f.terms.size());
  for (const auto &t : f.terms) {
    Monomial m(new_nv);
    for (std::size_t i = 0; i < f.nv; ++i) {
      if (!t.m.e[i]) continue;
      if (where[i] < 0) throw DomainError("variable dropped while in use");
      m.e[where[i]] = t.m.e[i];
    }
    r.terms.push_back({std::move(m), t.c});
  }
  normalize_terms(r);
  return r;
}

/// f(A z) on the leading `nz` variables; remaining variables pass through.
template <class F>
Poly<typename F::Elem>
substitute_linear(const F &field, const Poly<typename F::Elem> &f,
                  const std::vector<std::vector<typename F::Elem>> &A,
                  std::size_t nz) {
  using K = typename F::Elem;
  if (A.size() != nz) throw DomainError("substitution matrix dimension mismatch");
  for (const auto &row : A)
    if (row.size() != nz)
      throw DomainError("substitution matrix dimension mismatch");
  // images of z_i
  std::vector<Poly<K>> img(nz);
  for (std::size_t i = 0; i < nz; ++i) {
    Poly<K> g(f.nv);
    for (std::size_t j = 0; j < nz; ++j) {
      if (is_zero(A[i][j])) continue;
      Monomial m(f.nv);
      m.e[j] = 1;
      g.terms.push_back({m, A[i][j]});
    }
    normalize_terms(g);
    img[i] = std::move(g);
  }
  Poly<K> acc(f.nv);
  for (const auto &t : f.terms) {
    Poly<K> prod = constant_poly(field, f.nv, t.c);
    Monomial rest(f.nv);
    for (std::size_t i = 0; i < f.nv; ++i) {
      if (!t.m.e[i]) continue;
      if (i < nz)
        prod = prod * poly_pow(img[i], t.m.e[i]);
      else
        rest.e[i] = t.m.e[i];
    }
    acc = acc + mul_term(prod, rest, field.one());
  }
  return acc;
}

/// Degree of a monomial restricted to the leading `nz` variables.
inline std::uint32_t zdegree(const Monomial &m, std::size_t nz) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < nz; ++i) d += m.e[i];
  return d;
}

/// Numerator of f ∘ τ₁ on the leading `nz` variables,
/// τ₁ : (z₁,…) ↦ (1/z₁, z₂/z₁, …), cleared by the minimal power of z₁.
/// Variables beyond the z block pass through. The result carries no z₁
/// content by construction.
template <class K> Poly<K> tau1_numer(const Poly<K> &f, std::size_t nz) {
  if (f.is_zero()) return f;
  std::uint32_t dmax = 0;
  for (const auto &t : f.terms) dmax = std::max(dmax, zdegree(t.m, nz));
  Poly<K> r(f.nv);
  r.terms.reserve(f.terms.size());
  for (const auto &t : f.terms) {
    Monomial m = t.m;
    std::uint32_t zd = zdegree(m, nz);
    m.e[0] = dmax - zd; // old z₁ exponent is consumed, new one is the deficit
    r.terms.push_back({std::move(m), t.c});
  }
  normalize_terms(r);
  // dmax is attained, so there is no z₁ content; strip defensively anyway
  std::uint32_t strip = r.terms.empty() ? 0 : r.terms[0].m.e[0];
  for (const auto &t : r.terms) strip = std::min(strip, t.m.e[0]);
  if (strip) {
    for (auto &t : r.terms) t.m.e[0] -= strip;
    normalize_terms(r);
  }
  return r;
}

/// Ratio of polynomials; denominator nonzero.
template <class K> struct Fraction {
  Poly<K> num;
  Poly<K> den;
};

/// Leading term with respect to an order.
template <class K>
const Term<K> &leading_term(const Poly<K> &f, const MonomialOrder &ord) {
  if (f.is_zero()) throw DomainError("leading term of zero polynomial");
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.terms.size(); ++i)
    if (ord.greater(f.terms[i].m, f.terms[best].m)) best = i;
  return f.terms[best];
}

// --- Q-specific normalization -------------------------------------------

/// Scales to integer coefficients, removes integer content and makes the
/// grevlex-leading coefficient positive.
Poly<Rat> normalize_integer(const Poly<Rat> &f);

/// Monic under grevlex.
template <class F>
Poly<typename F::Elem> make_monic(const F &field,
                                  const Poly<typename F::Elem> &f) {
  if (f.is_zero()) return f;
  // canonical storage is grevlex-descending, so terms[0] leads
  return scale(f, field.inv(f.terms[0].c));
}

Poly<Fp> to_prime_field(const FpField &field, const Poly<Rat> &f);
Poly<Rat> poly_from_int_terms(const Poly<Int> &f); // helper for CRT output

std::string render(const Poly<Rat> &f, const Ring &ring);
std::string render(const Poly<Fp> &f, const Ring &ring);

} // namespace acv
