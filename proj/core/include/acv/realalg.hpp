#pragma once

#include <vector>

#include "acv/polynomial.hpp"

namespace acv {

/// Dense univariate polynomial, coefficients by ascending power; no
/// trailing zeros (zero polynomial is the empty vector).
using UniPoly = std::vector<Rat>;

UniPoly to_unipoly(const Poly<Rat> &f); // f must be univariate
Poly<Rat> from_unipoly(const UniPoly &q);

std::size_t uni_degree(const UniPoly &q); // degree of 0 reported as 0
Rat uni_eval(const UniPoly &q, const Rat &x);
UniPoly uni_derivative(const UniPoly &q);
UniPoly uni_mul(const UniPoly &a, const UniPoly &b);
UniPoly uni_add(const UniPoly &a, const UniPoly &b);
UniPoly uni_neg(const UniPoly &a);
/// remainder of a mod b (b ≠ 0)
UniPoly uni_rem(UniPoly a, const UniPoly &b);
/// monic gcd
UniPoly uni_gcd(UniPoly a, UniPoly b);
/// integer-coefficient, positive-leading normalization
UniPoly uni_normalize(const UniPoly &q);

/// q / gcd(q, q′), content-normalized; constants collapse to 1.
UniPoly squarefree_part(const UniPoly &q);

/// Contains exactly one real root of the polynomial it was made for;
/// lo = hi encodes an exact rational root.
struct IsolatingInterval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
};

struct AlgebraicNumber {
  UniPoly minimalish; // square-free, integer coefficients
  IsolatingInterval interval;

  bool is_exact() const { return interval.lo == interval.hi; }
};

/// Disjoint isolating intervals of all real roots, ascending; q square-free.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly &q);

std::vector<AlgebraicNumber> real_roots(const UniPoly &squarefree);

/// Sign-preserving bisection until the interval width is ≤ width.
AlgebraicNumber refine(AlgebraicNumber a, const Rat &width);

/// Exact decision: does g vanish at a? (g need not be a's polynomial)
bool vanishes_at(const UniPoly &g, AlgebraicNumber a);

/// Exact total order: −1, 0, +1.
int compare(AlgebraicNumber a, AlgebraicNumber b);

int sign_at(const AlgebraicNumber &a); // sign of the number itself

/// Closed rational interval; endpoints ordered.
struct RatInterval {
  Rat lo, hi;
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};

RatInterval iv_add(const RatInterval &a, const RatInterval &b);
RatInterval iv_sub(const RatInterval &a, const RatInterval &b);
RatInterval iv_mul(const RatInterval &a, const RatInterval &b);
RatInterval iv_pow(const RatInterval &a, std::uint32_t k);

/// Interval evaluation of a multivariate polynomial on a box.
RatInterval eval_box(const Poly<Rat> &f, const std::vector<RatInterval> &box);

RatInterval uni_eval_box(const UniPoly &q, const RatInterval &x);

} // namespace acv
