#include <random>

#include "acv/acv.hpp"

namespace acv {

DominantMap DominantMap::of(std::vector<Poly<Rat>> comps) {
  if (comps.empty()) throw DomainError("empty map");
  DominantMap m;
  m.n = comps[0].nv;
  m.p = comps.size();
  if (m.p > m.n) throw DomainError("more components than variables");
  for (const auto &c : comps) {
    if (c.nv != m.n) throw DomainError("polynomial arity mismatch");
    m.d = std::max(m.d, c.total_degree());
  }
  m.f = std::move(comps);
  return m;
}

namespace {

// all exponent vectors of total degree ≤ d, in n variables
void enumerate_monomials(std::size_t n, std::uint32_t d,
                         std::vector<std::uint32_t> &cur, std::size_t pos,
                         std::uint32_t used, std::vector<Monomial> &out) {
  if (pos == n) {
    Monomial m(n);
    m.e = cur;
    out.push_back(std::move(m));
    return;
  }
  for (std::uint32_t e = 0; e + used <= d; ++e) {
    cur[pos] = e;
    enumerate_monomials(n, d, cur, pos + 1, used + e, out);
  }
  cur[pos] = 0;
}

} // namespace

DominantMap make_family(const std::string &name, std::size_t n,
                        std::uint32_t d, std::uint64_t seed) {
  if (n < 2) throw DomainError("family needs n >= 2");
  QField q;
  if (name == "f") {
    // z₁² + Σ_{i≥2} (z₁ z_i − 1)²
    Poly<Rat> z1 = var_poly(q, n, 0);
    Poly<Rat> acc = z1 * z1;
    Poly<Rat> one = constant_poly(q, n, Rat(1));
    for (std::size_t i = 1; i < n; ++i) {
      Poly<Rat> t = z1 * var_poly(q, n, i) - one;
      acc = acc + t * t;
    }
    return DominantMap::of({acc});
  }
  if (name == "g") {
    // Σ_i Π_{j≠i} z_j²
    Poly<Rat> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
      Poly<Rat> prod = constant_poly(q, n, Rat(1));
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) prod = prod * var_poly(q, n, j) * var_poly(q, n, j);
      acc = acc + prod;
    }
    return DominantMap::of({acc});
  }
  if (name == "m") {
    // Σ_i Π_{j≤i} z_j^{2^{i−j}}; term i has degree 2^i − 1
    if (n > 20) throw DomainError("family m limited to n <= 20");
    Poly<Rat> acc(n);
    for (std::size_t i = 1; i <= n; ++i) {
      Monomial m(n);
      for (std::size_t j = 1; j <= i; ++j)
        m.e[j - 1] = 1u << (i - j);
      acc.terms.push_back({std::move(m), Rat(1)});
    }
    normalize_terms(acc);
    return DominantMap::of({acc});
  }
  if (name == "dense") {
    if (d < 1) throw DomainError("dense family needs a degree");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-99, 99);
    std::vector<Monomial> monos;
    std::vector<std::uint32_t> cur(n, 0);
    enumerate_monomials(n, d, cur, 0, 0, monos);
    Poly<Rat> acc(n);
    for (auto &m : monos) {
      long c = coeff(rng);
      while (c == 0) c = coeff(rng); // full support
      acc.terms.push_back({std::move(m), Rat(c)});
    }
    normalize_terms(acc);
    return DominantMap::of({acc});
  }
  throw DomainError("unknown family '" + name + "'");
}

} // namespace acv
