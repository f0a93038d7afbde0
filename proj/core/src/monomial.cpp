#include "acv/monomial.hpp"

#include "acv/field.hpp"

namespace acv {

bool divides(const Monomial &a, const Monomial &b) {
  if (a.nvars() != b.nvars()) throw DomainError("monomial arity mismatch");
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  if (a.nvars() != b.nvars()) throw DomainError("monomial arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

Monomial mono_div(const Monomial &a, const Monomial &b) {
  if (a.nvars() != b.nvars()) throw DomainError("monomial arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    if (b.e[i] > r.e[i]) throw DomainError("inexact monomial division");
    r.e[i] -= b.e[i];
  }
  return r;
}

Monomial mono_lcm(const Monomial &a, const Monomial &b) {
  if (a.nvars() != b.nvars()) throw DomainError("monomial arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i)
    if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
  return r;
}

bool mono_coprime(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

} // namespace acv
