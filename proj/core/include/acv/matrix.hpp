#pragma once

#include <vector>

#include "acv/polynomial.hpp"

namespace acv {

/// Leading block of the kernel matrix degenerated; the caller is expected to
/// redraw its random change of coordinates and retry.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K> struct PolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Poly<K>> entries; // row-major, rows*cols

  const Poly<K> &at(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
  Poly<K> &at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

/// Entry (i,j) = ∂f_i/∂z_j for the leading `nz` variables.
template <class K>
PolyMatrix<K> jacobian(const std::vector<Poly<K>> &f, std::size_t nz) {
  if (f.empty()) throw DomainError("jacobian of empty tuple");
  PolyMatrix<K> J;
  J.rows = f.size();
  J.cols = nz;
  J.entries.reserve(J.rows * J.cols);
  for (const auto &fi : f)
    for (std::size_t j = 0; j < nz; ++j)
      J.entries.push_back(derivative(fi, j));
  return J;
}

/// 1-based row removal; a 1×n input yields the empty 0×n matrix.
template <class K>
PolyMatrix<K> remove_row(const PolyMatrix<K> &J, std::size_t j) {
  if (j < 1 || j > J.rows) throw DomainError("row index out of range");
  PolyMatrix<K> R;
  R.rows = J.rows - 1;
  R.cols = J.cols;
  R.entries.reserve(R.rows * R.cols);
  for (std::size_t i = 0; i < J.rows; ++i) {
    if (i == j - 1) continue;
    for (std::size_t k = 0; k < J.cols; ++k)
      R.entries.push_back(J.at(i, k));
  }
  return R;
}

/// Exact quotient a/b; only valid when b divides a.
template <class F>
Poly<typename F::Elem> exact_div(const F &field,
                                 const Poly<typename F::Elem> &a,
                                 const Poly<typename F::Elem> &b) {
  using K = typename F::Elem;
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  Poly<K> rem = a, q(a.nv);
  // canonical storage leads with the grevlex-top term
  const Term<K> &lb = b.terms[0];
  K lbinv = field.inv(lb.c);
  while (!rem.is_zero()) {
    const Term<K> &lr = rem.terms[0];
    if (!divides(lb.m, lr.m)) throw DomainError("inexact polynomial division");
    Term<K> t{mono_div(lr.m, lb.m), lr.c * lbinv};
    q.terms.push_back(t);
    rem = rem - mul_term(b, t.m, t.c);
  }
  normalize_terms(q);
  return q;
}

/// Determinant by fraction-free (Bareiss) elimination; 0×0 gives 1.
template <class F>
Poly<typename F::Elem> det_fraction_free(const F &field,
                                         const PolyMatrix<typename F::Elem> &M);

/// Kernel of a (p−1)×n full-rank matrix via generalized Cramer: n−p+1
/// vectors whose numerators are signed maximal minors over the common
/// denominator delta = det of the leading (p−1)×(p−1) block. Empty J gives
/// the standard basis with delta = 1.
template <class F>
std::pair<std::vector<std::vector<Fraction<typename F::Elem>>>,
          Poly<typename F::Elem>>
kernel_basis_cramer(const F &field, const PolyMatrix<typename F::Elem> &J,
                    std::size_t nvars_ambient);

/// τ₁ numerator of a fraction whose denominator is a z₁-power monomial
/// times a unit, normalized to carry no z₁ content.
template <class F>
Poly<typename F::Elem> tau1_clear(const F &field,
                                  const Fraction<typename F::Elem> &h,
                                  std::size_t nz) {
  using K = typename F::Elem;
  if (h.den.is_zero()) throw DomainError("zero denominator");
  if (h.den.terms.size() != 1)
    throw DomainError("denominator not a monomial");
  const Term<K> &d = h.den.terms[0];
  for (std::size_t i = 1; i < h.den.nv; ++i)
    if (d.m.e[i]) throw DomainError("denominator not a power of the first variable");
  return scale(tau1_numer(h.num, nz), field.inv(d.c));
}

template <class K>
Poly<K> tau1_clear_poly(const Poly<K> &h, std::size_t nz) {
  return tau1_numer(h, nz);
}

// --- implementation -------------------------------------------------------

template <class F>
Poly<typename F::Elem>
det_fraction_free(const F &field, const PolyMatrix<typename F::Elem> &M) {
  using K = typename F::Elem;
  if (M.rows != M.cols) throw DomainError("determinant of non-square matrix");
  std::size_t n = M.rows;
  Poly<K> one = constant_poly(field, M.entries.empty() ? 0 : M.entries[0].nv,
                              field.one());
  if (n == 0) {
    Poly<K> r(0);
    r.terms.push_back({Monomial(0), field.one()});
    return r;
  }
  std::vector<Poly<K>> a = M.entries;
  auto at = [&](std::size_t i, std::size_t j) -> Poly<K> & {
    return a[i * n + j];
  };
  Poly<K> prev = one;
  bool flip = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && at(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly<K>(M.entries[0].nv); // singular
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      flip = !flip;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = exact_div(
            field, at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
    prev = at(k, k);
  }
  Poly<K> det = at(n - 1, n - 1);
  return flip ? -det : det;
}

template <class F>
std::pair<std::vector<std::vector<Fraction<typename F::Elem>>>,
          Poly<typename F::Elem>>
kernel_basis_cramer(const F &field, const PolyMatrix<typename F::Elem> &J,
                    std::size_t nvars_ambient) {
  using K = typename F::Elem;
  std::size_t r = J.rows, n = J.cols;
  std::size_t nv = J.entries.empty() ? nvars_ambient : J.entries[0].nv;
  Poly<K> one = constant_poly(field, nv, field.one());
  if (r == 0) {
    std::vector<std::vector<Fraction<K>>> basis;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Fraction<K>> v;
      for (std::size_t i = 0; i < n; ++i)
        v.push_back({i == j ? one : Poly<K>(nv), one});
      basis.push_back(std::move(v));
    }
    return {std::move(basis), one};
  }
  if (n < r + 1) throw DomainError("kernel matrix wider than tall expected");
  PolyMatrix<K> B; // leading r×r block
  B.rows = B.cols = r;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) B.entries.push_back(J.at(i, j));
  Poly<K> delta = det_fraction_free(field, B);
  if (delta.is_zero())
    throw DegenerateError("leading block of the kernel matrix is singular; "
                          "redraw the random change of coordinates");
  std::vector<std::vector<Fraction<K>>> basis;
  for (std::size_t j = r; j < n; ++j) {
    std::vector<Fraction<K>> v(n, Fraction<K>{Poly<K>(nv), delta});
    // Cramer solve of B x = −J_col_j: numerator of x_i is the minor with
    // column i replaced by −J_col_j
    for (std::size_t i = 0; i < r; ++i) {
      PolyMatrix<K> Bi = B;
      for (std::size_t k = 0; k < r; ++k) Bi.at(k, i) = -J.at(k, j);
      v[i].num = det_fraction_free(field, Bi);
    }
    v[j].num = delta;
    basis.push_back(std::move(v));
  }
  return {std::move(basis), delta};
}

} // namespace acv
