#include "acv/hilbert.hpp"

#include <algorithm>

namespace acv {

namespace {

using Series = std::vector<Int>; // coefficients by t-power

Series series_one() { return {Int(1)}; }

void add_scaled(Series &acc, const Series &s, std::uint32_t shift) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += s[i];
}

// acc *= (1 − t^d)
void mul_one_minus(Series &acc, std::uint32_t d) {
  Series out(acc.size() + d, 0);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    out[i] += acc[i];
    out[i + d] -= acc[i];
  }
  acc = std::move(out);
}

void minimalize(std::vector<Monomial> &g) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool red = false;
    for (std::size_t j = 0; j < g.size() && !red; ++j)
      if (i != j && divides(g[j], g[i]) && (!(g[j] == g[i]) || j < i))
        red = true;
    if (!red) out.push_back(g[i]);
  }
  g = std::move(out);
}

// Numerator of the Hilbert series of R/⟨gens⟩ by pivot recursion:
// HN(M) = HN(M + p) + t^{deg p} · HN(M : p).
Series numerator(std::vector<Monomial> gens) {
  minimalize(gens);
  for (const auto &m : gens)
    if (m.is_one()) return {Int(0)};
  if (gens.empty()) return series_one();
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!mono_coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    Series s = series_one();
    for (const auto &m : gens) mul_one_minus(s, m.degree());
    return s;
  }
  // pivot: the most shared variable, exponent = average positive exponent
  std::size_t nv = gens[0].nvars();
  std::size_t var = 0, best_count = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t cnt = 0;
    for (const auto &m : gens)
      if (m.e[v]) ++cnt;
    if (cnt > best_count) {
      best_count = cnt;
      var = v;
    }
  }
  std::uint64_t sum = 0, cnt = 0;
  for (const auto &m : gens)
    if (m.e[var]) {
      sum += m.e[var];
      ++cnt;
    }
  std::uint32_t e = static_cast<std::uint32_t>(std::max<std::uint64_t>(
      1, sum / cnt));
  // ensure the pivot strictly divides some generator's var-part or adds info;
  // with cnt ≥ 2 the recursion always shrinks the colon branch
  Monomial p(nv);
  p.e[var] = e;

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto &m : gens) {
    Monomial q = m;
    q.e[var] = m.e[var] > e ? m.e[var] - e : 0;
    colon.push_back(std::move(q));
  }
  Series a = numerator(std::move(plus));
  Series b = numerator(std::move(colon));
  add_scaled(a, b, e);
  return a;
}

Int eval_at_one(const Series &s) {
  Int v = 0;
  for (const auto &c : s) v += c;
  return v;
}

// divides by (1 − t); valid when eval_at_one is 0
Series div_one_minus(const Series &s) {
  // s = (1 − t)·q ⇒ q_i = s_0 + s_1 + … + s_i, top coefficient telescopes away
  Series q(s.size() ? s.size() - 1 : 0, 0);
  Int acc = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    acc += s[i];
    q[i] = acc;
  }
  return q;
}

} // namespace

std::vector<Int> hilbert_numerator(std::vector<Monomial> gens) {
  return numerator(std::move(gens));
}

Int ideal_degree_of_monomials(std::vector<Monomial> lead) {
  Series s = numerator(std::move(lead));
  bool all_zero = true;
  for (const auto &c : s)
    if (c != 0) all_zero = false;
  if (all_zero) return 0;
  while (eval_at_one(s) == 0) s = div_one_minus(s);
  Int d = eval_at_one(s);
  return d < 0 ? Int(-d) : d;
}

} // namespace acv
