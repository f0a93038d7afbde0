#include "acv/realalg.hpp"

#include <algorithm>

namespace acv {

namespace {
void trim(UniPoly &q) {
  while (!q.empty() && q.back() == 0) q.pop_back();
}
int sgn(const Rat &x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
} // namespace

UniPoly to_unipoly(const Poly<Rat> &f) {
  if (f.nv != 1) throw DomainError("expected a univariate polynomial");
  UniPoly q(f.total_degree() + 1, Rat(0));
  for (const auto &t : f.terms) q[t.m.e[0]] = t.c;
  trim(q);
  return q;
}

Poly<Rat> from_unipoly(const UniPoly &q) {
  Poly<Rat> f(1);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    Monomial m(1);
    m.e[0] = static_cast<std::uint32_t>(i);
    f.terms.push_back({std::move(m), q[i]});
  }
  normalize_terms(f);
  return f;
}

std::size_t uni_degree(const UniPoly &q) { return q.empty() ? 0 : q.size() - 1; }

Rat uni_eval(const UniPoly &q, const Rat &x) {
  Rat acc = 0;
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * x + q[i];
  return acc;
}

UniPoly uni_derivative(const UniPoly &q) {
  UniPoly d;
  for (std::size_t i = 1; i < q.size(); ++i) d.push_back(q[i] * Rat(long(i)));
  trim(d);
  return d;
}

UniPoly uni_mul(const UniPoly &a, const UniPoly &b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UniPoly uni_add(const UniPoly &a, const UniPoly &b) {
  UniPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

UniPoly uni_neg(const UniPoly &a) {
  UniPoly r = a;
  for (auto &c : r) c = -c;
  return r;
}

UniPoly uni_rem(UniPoly a, const UniPoly &b) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto &c : a) c /= lead;
  }
  return a;
}

UniPoly uni_normalize(const UniPoly &q) {
  if (q.empty()) return q;
  Int den = 1;
  for (const auto &c : q) {
    Int d = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  Int content = 0;
  for (const auto &c : q) {
    Rat s = c * den;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            s.get_num().get_mpz_t());
  }
  Rat unit = Rat(den) / content;
  if (q.back() < 0) unit = -unit;
  UniPoly r = q;
  for (auto &c : r) {
    c *= unit;
    c.canonicalize();
  }
  return r;
}

UniPoly squarefree_part(const UniPoly &q) {
  UniPoly t = q;
  trim(t);
  if (t.empty()) throw DomainError("square-free part of zero");
  if (t.size() == 1) return {Rat(1)};
  UniPoly g = uni_gcd(t, uni_derivative(t));
  // exact quotient t / g
  UniPoly r(t.size() - g.size() + 1, Rat(0));
  UniPoly rem = t;
  while (rem.size() >= g.size() && !rem.empty()) {
    Rat f = rem.back() / g.back();
    std::size_t off = rem.size() - g.size();
    r[off] = f;
    for (std::size_t i = 0; i < g.size(); ++i) rem[off + i] -= f * g[i];
    rem.pop_back();
    trim(rem);
  }
  return uni_normalize(r);
}

namespace {

// coefficients of q(l + (r−l)x)
UniPoly shift_scale(const UniPoly &q, const Rat &l, const Rat &r) {
  // Horner composition with the linear polynomial l + s·x
  Rat s = r - l;
  UniPoly acc; // result, built from the top coefficient down
  for (std::size_t i = q.size(); i-- > 0;) {
    // acc ← acc·(l + s x) + q[i]
    UniPoly next(acc.size() + 1, Rat(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k] * l;
      next[k + 1] += acc[k] * s;
    }
    if (next.empty()) next.resize(1, Rat(0));
    next[0] += q[i];
    trim(next);
    acc = std::move(next);
  }
  return acc;
}

// Descartes sign-variation count of (1+x)^m · p(x/(1+x)), the root-count
// bound for p on (0,1)
std::size_t variations01(const UniPoly &p) {
  std::size_t m = uni_degree(p);
  UniPoly t(m + 1, Rat(0));
  // Σ_i p_i x^i (1+x)^{m−i}
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    std::size_t e = m - i;
    Int b = 1;
    for (std::size_t k = 0; k <= e; ++k) {
      t[i + k] += p[i] * Rat(b);
      b = b * Int(long(e - k)) / Int(long(k + 1));
    }
  }
  std::size_t v = 0;
  int last = 0;
  for (const auto &c : t) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// (l, r) holds exactly one root but an endpoint may be a root of q (a
// rational root recorded separately); move such endpoints inward so the
// closed interval isolates and endpoint signs certify
IsolatingInterval repair_endpoints(const UniPoly &q, Rat l, Rat r) {
  while (uni_eval(q, l) == 0) {
    Rat l2 = l + (r - l) / 4;
    Rat f = uni_eval(q, l2);
    if (f == 0) return {l2, l2}; // the lone interior root is rational
    // parity of the Descartes count decides which side holds the root
    if (variations01(shift_scale(q, l, l2)) % 2 == 1)
      r = l2;
    else {
      l = l2;
      break;
    }
  }
  while (uni_eval(q, r) == 0) {
    Rat r2 = r - (r - l) / 4;
    Rat f = uni_eval(q, r2);
    if (f == 0) return {r2, r2};
    if (variations01(shift_scale(q, r2, r)) % 2 == 1)
      l = r2;
    else {
      r = r2;
      break;
    }
  }
  return {l, r};
}

// open-interval isolation; an endpoint being a root is tolerated (repaired
// on emission)
void isolate_open(const UniPoly &q, const Rat &l, const Rat &r,
                  std::vector<IsolatingInterval> &out) {
  std::size_t v = variations01(shift_scale(q, l, r));
  if (v == 0) return;
  if (v == 1) {
    out.push_back(repair_endpoints(q, l, r));
    return;
  }
  Rat mid = (l + r) / 2;
  if (uni_eval(q, mid) == 0) {
    isolate_open(q, l, mid, out);
    out.push_back({mid, mid});
    isolate_open(q, mid, r, out);
  } else {
    isolate_open(q, l, mid, out);
    isolate_open(q, mid, r, out);
  }
}

} // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly &q) {
  UniPoly t = q;
  trim(t);
  if (t.empty()) throw DomainError("cannot isolate roots of zero");
  std::vector<IsolatingInterval> out;
  if (t.size() == 1) return out;
  // Cauchy bound: 1 + max |a_i / a_m|, taken as the next integer
  Rat mx = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    Rat a = t[i] / t.back();
    if (a < 0) a = -a;
    if (a > mx) mx = a;
  }
  Int bi = mx.get_num() / mx.get_den() + 2;
  Rat B(bi);
  if (uni_eval(t, -B) == 0 || uni_eval(t, B) == 0)
    B += 1; // the bound is strict, so this never loops
  isolate_open(t, -B, B, out);
  // adjacent bisection panels may share an endpoint (never a root unless
  // recorded exactly); bisect toward the interior root until disjoint
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].hi >= out[i + 1].lo) {
      IsolatingInterval &iv = out[i].lo < out[i].hi ? out[i] : out[i + 1];
      Rat mid = (iv.lo + iv.hi) / 2;
      Rat fm = uni_eval(t, mid);
      if (fm == 0) {
        iv = {mid, mid};
        continue;
      }
      if (sgn(uni_eval(t, iv.lo)) * sgn(fm) < 0)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
  }
  return out;
}

std::vector<AlgebraicNumber> real_roots(const UniPoly &squarefree) {
  std::vector<AlgebraicNumber> r;
  UniPoly q = uni_normalize(squarefree);
  for (const auto &iv : isolate_real_roots(q)) r.push_back({q, iv});
  return r;
}

AlgebraicNumber refine(AlgebraicNumber a, const Rat &width) {
  if (width <= 0) throw DomainError("refinement width must be positive");
  if (a.is_exact()) return a;
  const UniPoly &q = a.minimalish;
  Rat flo = uni_eval(q, a.interval.lo);
  while (a.interval.width() > width) {
    Rat mid = (a.interval.lo + a.interval.hi) / 2;
    Rat fm = uni_eval(q, mid);
    if (fm == 0) {
      a.interval = {mid, mid};
      return a;
    }
    if (sgn(flo) * sgn(fm) < 0) {
      a.interval.hi = mid;
    } else {
      a.interval.lo = mid;
      flo = fm;
    }
  }
  return a;
}

bool vanishes_at(const UniPoly &g, AlgebraicNumber a) {
  UniPoly t = g;
  trim(t);
  if (t.empty()) return true;
  if (a.is_exact()) return uni_eval(t, a.interval.lo) == 0;
  UniPoly h = uni_gcd(a.minimalish, t);
  if (h.size() <= 1) return false;
  // h's roots are roots of the isolating polynomial, so the interval holds
  // at most one of them, and endpoints are never roots
  return sgn(uni_eval(h, a.interval.lo)) * sgn(uni_eval(h, a.interval.hi)) < 0;
}

namespace {

// refines a until its interval sits inside one of the disjoint intervals;
// a must be a root of the polynomial the intervals isolate
std::size_t locate(const std::vector<AlgebraicNumber> &roots,
                   AlgebraicNumber a) {
  for (;;) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto &iv = roots[i].interval;
      if (iv.lo <= a.interval.lo && a.interval.hi <= iv.hi) return i;
    }
    if (a.is_exact()) {
      // exact value on an interval boundary: compare against each root
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (vanishes_at(roots[i].minimalish, a) &&
            roots[i].interval.lo <= a.interval.lo &&
            a.interval.lo <= roots[i].interval.hi)
          return i;
      throw DomainError("algebraic number escaped its root list");
    }
    a = refine(a, a.interval.width() / 4);
  }
}

} // namespace

int compare(AlgebraicNumber a, AlgebraicNumber b) {
  if (a.is_exact() && b.is_exact())
    return a.interval.lo < b.interval.lo ? -1
           : a.interval.lo > b.interval.lo ? 1
                                           : 0;
  // exact equality first, so the separation loop below terminates
  bool equal = false;
  if (a.is_exact()) {
    equal = vanishes_at({-a.interval.lo, Rat(1)}, b);
  } else if (b.is_exact()) {
    equal = vanishes_at({-b.interval.lo, Rat(1)}, a);
  } else {
    UniPoly h = uni_gcd(a.minimalish, b.minimalish);
    if (h.size() > 1 && vanishes_at(h, a) && vanishes_at(h, b)) {
      std::vector<AlgebraicNumber> hr = real_roots(uni_normalize(h));
      equal = locate(hr, a) == locate(hr, b);
    }
  }
  if (equal) return 0;
  for (;;) {
    if (a.interval.hi < b.interval.lo) return -1;
    if (b.interval.hi < a.interval.lo) return 1;
    if (!a.is_exact()) a = refine(a, a.interval.width() / 4);
    if (!b.is_exact()) b = refine(b, b.interval.width() / 4);
  }
}

int sign_at(const AlgebraicNumber &a) {
  AlgebraicNumber zero{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}};
  return compare(a, zero);
}

RatInterval iv_add(const RatInterval &a, const RatInterval &b) {
  return {a.lo + b.lo, a.hi + b.hi};
}
RatInterval iv_sub(const RatInterval &a, const RatInterval &b) {
  return {a.lo - b.hi, a.hi - b.lo};
}
RatInterval iv_mul(const RatInterval &a, const RatInterval &b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return {std::min(std::min(c1, c2), std::min(c3, c4)),
          std::max(std::max(c1, c2), std::max(c3, c4))};
}
RatInterval iv_pow(const RatInterval &a, std::uint32_t k) {
  // exact range of x ↦ x^k over the interval (iv_mul would forget that
  // the factors are the same variable)
  auto pw = [&](Rat x) {
    Rat r(1);
    for (std::uint32_t i = 0; i < k; ++i) r *= x;
    return r;
  };
  if (k % 2 == 1 || k == 0) return {pw(a.lo), pw(a.hi)};
  Rat lo = pw(a.lo), hi = pw(a.hi);
  if (lo > hi) std::swap(lo, hi);
  if (a.contains_zero()) lo = 0;
  return {lo, hi};
}

RatInterval eval_box(const Poly<Rat> &f, const std::vector<RatInterval> &box) {
  if (box.size() != f.nv) throw DomainError("box arity mismatch");
  RatInterval acc{Rat(0), Rat(0)};
  for (const auto &t : f.terms) {
    RatInterval v{t.c, t.c};
    for (std::size_t i = 0; i < f.nv; ++i)
      if (t.m.e[i]) v = iv_mul(v, iv_pow(box[i], t.m.e[i]));
    acc = iv_add(acc, v);
  }
  return acc;
}

RatInterval uni_eval_box(const UniPoly &q, const RatInterval &x) {
  RatInterval acc{Rat(0), Rat(0)};
  for (std::size_t i = q.size(); i-- > 0;) {
    acc = iv_mul(acc, x);
    acc = iv_add(acc, RatInterval{q[i], q[i]});
  }
  return acc;
}

} // namespace acv
