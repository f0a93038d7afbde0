#pragma once

#include <vector>

#include "acv/groebner.hpp"

namespace acv {

/// Numerator of the Hilbert series of R/M over (1−t)^n for a monomial
/// ideal M, as integer coefficients indexed by t-power.
std::vector<Int> hilbert_numerator(std::vector<Monomial> gens);

/// Degree of the ideal: strip all (1−t) factors from the numerator of the
/// Hilbert series of R/LT(I) and evaluate at 1. Unit ideal gives 0.
Int ideal_degree_of_monomials(std::vector<Monomial> lead);

template <class F>
Int ideal_degree(const F &field,
                 const std::vector<Poly<typename F::Elem>> &gens,
                 const GBOptions &opts = {}) {
  if (gens.empty()) return 0;
  std::size_t nv = gens[0].nv;
  auto G = groebner_basis(field, gens, MonomialOrder::grevlex(nv), opts);
  std::vector<Monomial> lead;
  for (const auto &g : G) lead.push_back(g.terms[0].m);
  return ideal_degree_of_monomials(std::move(lead));
}

} // namespace acv
