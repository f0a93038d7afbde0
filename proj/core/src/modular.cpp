#include "acv/modular.hpp"

#include <map>

namespace acv {

namespace {
bool is_word_prime(std::uint32_t n) {
  Int z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}
} // namespace

std::uint32_t next_word_prime_below(std::uint32_t below) {
  for (std::uint32_t c = below - 1;; --c) {
    if (is_word_prime(c)) return c;
    if (c < 3) throw DomainError("prime supply exhausted");
  }
}

std::vector<std::uint32_t> word_primes(std::size_t count) {
  std::vector<std::uint32_t> ps;
  std::uint32_t c = 2147483647u; // 2^31 − 1, itself prime
  while (ps.size() < count) {
    if (is_word_prime(c)) ps.push_back(c);
    --c;
  }
  return ps;
}

Poly<Int> crt_combine(
    const std::vector<std::pair<Poly<Fp>, std::uint32_t>> &residues,
    Int &modulus) {
  if (residues.empty()) throw DomainError("no residues to combine");
  std::size_t nv = residues[0].first.nv;
  // unified support keyed in canonical order
  std::map<std::vector<std::uint32_t>, Int> coeffs;
  Int M = 1;
  for (const auto &[f, pw] : residues) {
    if (f.nv != nv) throw DomainError("polynomial arity mismatch");
    Int p(pw);
    Int g;
    mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), p.get_mpz_t());
    if (g != 1) throw DomainError("non-coprime moduli");
    // x ≡ old (mod M), x ≡ c (mod p): x = old + M·((c − old)·M⁻¹ mod p)
    Int Minv;
    if (mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), p.get_mpz_t()) == 0)
      throw DomainError("non-coprime moduli");
    std::map<std::vector<std::uint32_t>, Int> next;
    auto lift = [&](const std::vector<std::uint32_t> &key, const Int &oldv,
                    const Int &cv) {
      Int t = ((cv - oldv) * Minv) % p;
      if (t < 0) t += p;
      next[key] = oldv + M * t;
    };
    std::map<std::vector<std::uint32_t>, Int> cur;
    for (const auto &t : f.terms) cur[t.m.e] = Int(t.c.v);
    for (const auto &kv : coeffs) {
      auto it = cur.find(kv.first);
      lift(kv.first, kv.second, it == cur.end() ? Int(0) : it->second);
    }
    for (const auto &kv : cur)
      if (!coeffs.count(kv.first)) lift(kv.first, Int(0), kv.second);
    coeffs = std::move(next);
    M *= p;
  }
  Poly<Int> out(nv);
  for (const auto &kv : coeffs) {
    if (kv.second == 0) continue;
    Monomial m(nv);
    m.e = kv.first;
    out.terms.push_back({std::move(m), kv.second});
  }
  normalize_terms(out);
  modulus = M;
  return out;
}

std::optional<Rat> rational_reconstruct(const Int &a, const Int &m) {
  if (a < 0 || a >= m) throw DomainError("residue out of range");
  Int bound2 = m / 2; // accept n,d with 2n² ≤ m i.e. n² ≤ m/2
  // half-extended Euclid on (m, a); invariant r_i = s_i·m + t_i·a
  Int r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 * r1 > bound2) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  Int n = r1, d = t1;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d == 0 || d * d > bound2) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat v(n, d);
  v.canonicalize();
  return v;
}

std::optional<Poly<Rat>> rational_reconstruct(const Poly<Int> &f,
                                              const Int &m) {
  Poly<Rat> r(f.nv);
  r.terms.reserve(f.terms.size());
  for (const auto &t : f.terms) {
    Int a = t.c % m;
    if (a < 0) a += m;
    auto c = rational_reconstruct(a, m);
    if (!c) return std::nullopt;
    if (*c != 0) r.terms.push_back({t.m, *c});
  }
  normalize_terms(r);
  return r;
}

} // namespace acv
