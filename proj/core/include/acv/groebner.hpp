#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "acv/order.hpp"
#include "acv/polynomial.hpp"

namespace acv {

/// A configurable budget was exhausted; callers may retry modularly or with
/// a larger budget.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GBOptions {
  std::uint64_t max_pairs = 1000000; // processed S-pairs
  std::size_t max_coeff_bits = 1u << 20; // per-coefficient cap over Q
};

namespace detail {
inline std::size_t coeff_bits(const Rat &c) {
  return mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(c.get_den().get_mpz_t(), 2);
}
inline std::size_t coeff_bits(const Fp &) { return 0; }
} // namespace detail

/// Remainder of f on division by G (full tail reduction).
template <class F>
Poly<typename F::Elem> normal_form(const F &field,
                                   const Poly<typename F::Elem> &f,
                                   const std::vector<Poly<typename F::Elem>> &G,
                                   const MonomialOrder &ord) {
  using K = typename F::Elem;
  // cache the divisors' leading terms: G is stable for the whole call
  std::vector<const Poly<K> *> gs;
  std::vector<const Term<K> *> lg;
  for (const auto &g : G) {
    if (g.is_zero()) continue;
    gs.push_back(&g);
    lg.push_back(&leading_term(g, ord));
  }
  Poly<K> rem(f.nv), cur = f;
  while (!cur.is_zero()) {
    std::size_t li = 0;
    for (std::size_t i = 1; i < cur.terms.size(); ++i)
      if (ord.greater(cur.terms[i].m, cur.terms[li].m)) li = i;
    const Term<K> lt = cur.terms[li];
    bool reduced = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!divides(lg[i]->m, lt.m)) continue;
      K c = lt.c * field.inv(lg[i]->c);
      cur = cur - mul_term(*gs[i], mono_div(lt.m, lg[i]->m), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.terms.push_back(lt);
      cur.terms.erase(cur.terms.begin() + li); // canonical order is kept
    }
  }
  normalize_terms(rem);
  return rem;
}

/// Reduced (monic, autoreduced) Gröbner basis of ⟨gens⟩ w.r.t. ord.
/// Buchberger with the Gebauer–Möller pair criteria and degree-of-lcm
/// selection; deterministic: input is canonicalized before the run.
template <class F>
std::vector<Poly<typename F::Elem>>
groebner_basis(const F &field, std::vector<Poly<typename F::Elem>> gens,
               const MonomialOrder &ord, const GBOptions &opts = {});

/// Gröbner basis of ⟨gens⟩ ∩ K[vars not in drop], computed with a block
/// order placing drop in front. Output polynomials live in the same
/// ambient but are free of drop-variables.
template <class F>
std::vector<Poly<typename F::Elem>>
eliminate(const F &field, const std::vector<Poly<typename F::Elem>> &gens,
          const std::vector<std::size_t> &drop, const GBOptions &opts = {});

/// ⟨gens⟩ : ⟨g⟩^∞ via a fresh inverse variable appended to the ambient.
template <class F>
std::vector<Poly<typename F::Elem>>
saturate_rabinowitsch(const F &field,
                      const std::vector<Poly<typename F::Elem>> &gens,
                      const Poly<typename F::Elem> &g,
                      const GBOptions &opts = {});

/// ⟨gens⟩ : ⟨x_var⟩^∞ by homogenizing, computing a grevlex basis in which
/// x_var is revlex-smallest, dividing out x_var powers and dehomogenizing.
template <class F>
std::vector<Poly<typename F::Elem>>
saturate_bayer(const F &field,
               const std::vector<Poly<typename F::Elem>> &gens,
               std::size_t var, const GBOptions &opts = {});

/// ⋂⟨P_i⟩ folded pairwise with the t-trick.
template <class F>
std::vector<Poly<typename F::Elem>>
intersect(const F &field,
          const std::vector<std::vector<Poly<typename F::Elem>>> &bases,
          std::size_t nv, const GBOptions &opts = {});

/// True iff 1 ∈ ⟨G⟩ for a Gröbner basis G.
template <class K> bool is_unit_ideal(const std::vector<Poly<K>> &G) {
  for (const auto &g : G)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

} // namespace acv
