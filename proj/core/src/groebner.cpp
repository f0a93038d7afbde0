#include "acv/groebner.hpp"

namespace acv {

namespace {

template <class K> struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t deg;
};

template <class K>
void check_bits(const Poly<K> &f, const GBOptions &opts) {
  for (const auto &t : f.terms)
    if (detail::coeff_bits(t.c) > opts.max_coeff_bits)
      throw ResourceLimitError("coefficient size budget exceeded");
}

// Gebauer–Möller update of the pair queue after appending basis element t.
template <class K>
void update_pairs(std::vector<Pair<K>> &P, const std::vector<Poly<K>> &G,
                  std::size_t t, const MonomialOrder &ord) {
  const Monomial &ltt = leading_term(G[t], ord).m;
  std::vector<Pair<K>> fresh;
  for (std::size_t i = 0; i < t; ++i) {
    Monomial l = mono_lcm(leading_term(G[i], ord).m, ltt);
    fresh.push_back({i, t, l, l.degree()});
  }
  // old-pair (B) criterion
  std::vector<Pair<K>> kept;
  for (auto &pr : P) {
    const Monomial &li = leading_term(G[pr.i], ord).m;
    const Monomial &lj = leading_term(G[pr.j], ord).m;
    if (divides(ltt, pr.lcm) && !(mono_lcm(li, ltt) == pr.lcm) &&
        !(mono_lcm(lj, ltt) == pr.lcm))
      continue;
    kept.push_back(std::move(pr));
  }
  P = std::move(kept);
  // M criterion: drop (i,t) when another new lcm strictly divides it
  std::vector<bool> drop(fresh.size(), false);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || drop[b]) continue;
      if (divides(fresh[b].lcm, fresh[a].lcm) &&
          !(fresh[b].lcm == fresh[a].lcm)) {
        drop[a] = true;
        break;
      }
    }
  // F criterion: among equal lcms keep the first
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    for (std::size_t b = 0; b < a; ++b)
      if (!drop[b] && fresh[b].lcm == fresh[a].lcm) {
        drop[a] = true;
        break;
      }
  }
  // coprime criterion
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    if (mono_coprime(leading_term(G[fresh[a].i], ord).m, ltt)) drop[a] = true;
  }
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (!drop[a]) P.push_back(std::move(fresh[a]));
}

} // namespace

template <class F>
std::vector<Poly<typename F::Elem>>
groebner_basis(const F &field, std::vector<Poly<typename F::Elem>> gens,
               const MonomialOrder &ord, const GBOptions &opts) {
  using K = typename F::Elem;
  std::vector<Poly<K>> G;
  for (auto &g : gens) {
    if (g.is_zero()) continue;
    G.push_back(scale(g, field.inv(leading_term(g, ord).c)));
  }
  if (G.empty()) return {};
  // canonical input order: reduced output is unique anyway, this only makes
  // the run itself reproducible
  std::sort(G.begin(), G.end(), [&](const Poly<K> &a, const Poly<K> &b) {
    if (a.terms.size() != b.terms.size())
      return a.terms.size() < b.terms.size();
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
      int c = ord.compare(a.terms[i].m, b.terms[i].m);
      if (c) return c > 0;
    }
    return false;
  });
  G.erase(std::unique(G.begin(), G.end()), G.end());

  std::vector<Pair<K>> P;
  for (std::size_t t = 1; t < G.size(); ++t) update_pairs(P, G, t, ord);

  std::uint64_t processed = 0;
  while (!P.empty()) {
    // normal strategy: least lcm degree, ties by the order on lcms
    std::size_t best = 0;
    for (std::size_t a = 1; a < P.size(); ++a) {
      if (P[a].deg < P[best].deg ||
          (P[a].deg == P[best].deg && ord.greater(P[best].lcm, P[a].lcm)))
        best = a;
    }
    Pair<K> pr = P[best];
    P.erase(P.begin() + best);
    if (++processed > opts.max_pairs)
      throw ResourceLimitError("S-pair budget exceeded");
    const Poly<K> &fi = G[pr.i];
    const Poly<K> &fj = G[pr.j];
    Poly<K> s =
        mul_term(fi, mono_div(pr.lcm, leading_term(fi, ord).m), field.one()) -
        mul_term(fj, mono_div(pr.lcm, leading_term(fj, ord).m), field.one());
    Poly<K> r = normal_form(field, s, G, ord);
    if (r.is_zero()) continue;
    check_bits(r, opts);
    r = scale(r, field.inv(leading_term(r, ord).c));
    G.push_back(std::move(r));
    update_pairs(P, G, G.size() - 1, ord);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Poly<K>> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      const Monomial &li = leading_term(G[i], ord).m,
                     &lj = leading_term(G[j], ord).m;
      if (divides(lj, li) && (!(lj == li) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) M.push_back(G[i]);
  }
  // tail-reduce each element against the others
  std::vector<Poly<K>> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    Poly<K> r = normal_form(field, M[i], others, ord);
    r = scale(r, field.inv(leading_term(r, ord).c));
    R.push_back(std::move(r));
  }
  std::sort(R.begin(), R.end(), [&](const Poly<K> &a, const Poly<K> &b) {
    return ord.greater(leading_term(a, ord).m, leading_term(b, ord).m);
  });
  return R;
}

template <class F>
std::vector<Poly<typename F::Elem>>
eliminate(const F &field, const std::vector<Poly<typename F::Elem>> &gens,
          const std::vector<std::size_t> &drop, const GBOptions &opts) {
  using K = typename F::Elem;
  if (gens.empty()) return {};
  std::size_t nv = gens[0].nv;
  std::vector<bool> in_drop(nv, false);
  for (std::size_t v : drop) in_drop[v] = true;
  MonomialOrder ord = MonomialOrder::block(nv, drop);
  std::vector<Poly<K>> G = groebner_basis(field, gens, ord, opts);
  std::vector<Poly<K>> out;
  for (auto &g : G) {
    bool free = true;
    for (std::size_t v = 0; v < nv && free; ++v)
      if (in_drop[v] && g.depends_on(v)) free = false;
    if (free) out.push_back(std::move(g));
  }
  return out;
}

template <class F>
std::vector<Poly<typename F::Elem>>
saturate_rabinowitsch(const F &field,
                      const std::vector<Poly<typename F::Elem>> &gens,
                      const Poly<typename F::Elem> &g, const GBOptions &opts) {
  using K = typename F::Elem;
  if (g.is_zero()) throw DomainError("saturation by zero");
  std::size_t nv = g.nv;
  std::vector<int> up(nv);
  for (std::size_t i = 0; i < nv; ++i) up[i] = static_cast<int>(i);
  std::vector<Poly<K>> ext;
  for (const auto &f : gens) ext.push_back(remap_vars(f, nv + 1, up));
  // ℓ·g − 1 with ℓ the appended variable
  Poly<K> lg = remap_vars(g, nv + 1, up) * var_poly(field, nv + 1, nv);
  ext.push_back(lg - constant_poly(field, nv + 1, field.one()));
  std::vector<Poly<K>> el = eliminate(field, ext, {nv}, opts);
  std::vector<int> down(nv + 1);
  for (std::size_t i = 0; i < nv; ++i) down[i] = static_cast<int>(i);
  down[nv] = -1;
  std::vector<Poly<K>> out;
  for (const auto &f : el) out.push_back(remap_vars(f, nv, down));
  return groebner_basis(field, out, MonomialOrder::grevlex(nv), opts);
}

template <class F>
std::vector<Poly<typename F::Elem>>
saturate_bayer(const F &field, const std::vector<Poly<typename F::Elem>> &gens,
               std::size_t var, const GBOptions &opts) {
  using K = typename F::Elem;
  if (gens.empty()) return {};
  std::size_t nv = gens[0].nv;
  std::size_t h = nv; // homogenizing variable
  std::vector<int> up(nv);
  for (std::size_t i = 0; i < nv; ++i) up[i] = static_cast<int>(i);
  std::vector<Poly<K>> hom;
  for (const auto &f : gens) {
    if (f.is_zero()) continue;
    Poly<K> g = remap_vars(f, nv + 1, up);
    std::uint32_t d = g.total_degree();
    for (auto &t : g.terms) t.m.e[h] = d - t.m.degree();
    normalize_terms(g);
    hom.push_back(std::move(g));
  }
  // graded order with the saturating variable revlex-smallest: the divided
  // basis then generates the saturation of the homogeneous ideal
  std::vector<std::size_t> seq;
  for (std::size_t i = 0; i < nv + 1; ++i)
    if (i != var && i != h) seq.push_back(i);
  seq.push_back(h);
  seq.push_back(var);
  MonomialOrder ord = MonomialOrder::grevlex_seq(seq);
  std::vector<Poly<K>> G = groebner_basis(field, hom, ord, opts);
  std::vector<int> down(nv + 1);
  for (std::size_t i = 0; i < nv; ++i) down[i] = static_cast<int>(i);
  down[h] = -1;
  std::vector<Poly<K>> out;
  for (auto &g : G) {
    std::uint32_t strip = g.terms.empty() ? 0 : g.terms[0].m.e[var];
    for (const auto &t : g.terms) strip = std::min(strip, t.m.e[var]);
    Poly<K> q = g;
    for (auto &t : q.terms) {
      t.m.e[var] -= strip;
      t.m.e[h] = 0; // dehomogenize
    }
    normalize_terms(q);
    out.push_back(remap_vars(q, nv, down));
  }
  return groebner_basis(field, out, MonomialOrder::grevlex(nv), opts);
}

template <class F>
std::vector<Poly<typename F::Elem>>
intersect(const F &field,
          const std::vector<std::vector<Poly<typename F::Elem>>> &bases,
          std::size_t nv, const GBOptions &opts) {
  using K = typename F::Elem;
  if (bases.empty()) throw DomainError("intersection of no ideals");
  std::vector<Poly<K>> acc = bases[0];
  for (std::size_t b = 1; b < bases.size(); ++b) {
    std::vector<int> up(nv);
    for (std::size_t i = 0; i < nv; ++i) up[i] = static_cast<int>(i);
    Poly<K> t = var_poly(field, nv + 1, nv);
    Poly<K> one_minus_t =
        constant_poly(field, nv + 1, field.one()) - t;
    std::vector<Poly<K>> ext;
    for (const auto &f : acc) ext.push_back(remap_vars(f, nv + 1, up) * t);
    for (const auto &f : bases[b])
      ext.push_back(remap_vars(f, nv + 1, up) * one_minus_t);
    std::vector<Poly<K>> el = eliminate(field, ext, {nv}, opts);
    std::vector<int> down(nv + 1);
    for (std::size_t i = 0; i < nv; ++i) down[i] = static_cast<int>(i);
    down[nv] = -1;
    acc.clear();
    for (const auto &f : el) acc.push_back(remap_vars(f, nv, down));
  }
  return groebner_basis(field, acc, MonomialOrder::grevlex(nv), opts);
}

// explicit instantiations for the two coefficient domains in use
#define ACV_GB_INSTANTIATE(F, K)                                               \
  template std::vector<Poly<K>> groebner_basis<F>(                             \
      const F &, std::vector<Poly<K>>, const MonomialOrder &,                  \
      const GBOptions &);                                                      \
  template std::vector<Poly<K>> eliminate<F>(                                  \
      const F &, const std::vector<Poly<K>> &,                                 \
      const std::vector<std::size_t> &, const GBOptions &);                    \
  template std::vector<Poly<K>> saturate_rabinowitsch<F>(                      \
      const F &, const std::vector<Poly<K>> &, const Poly<K> &,                \
      const GBOptions &);                                                      \
  template std::vector<Poly<K>> saturate_bayer<F>(                             \
      const F &, const std::vector<Poly<K>> &, std::size_t,                    \
      const GBOptions &);                                                      \
  template std::vector<Poly<K>> intersect<F>(                                  \
      const F &, const std::vector<std::vector<Poly<K>>> &, std::size_t,       \
      const GBOptions &);

ACV_GB_INSTANTIATE(QField, Rat)
ACV_GB_INSTANTIATE(FpField, Fp)

} // namespace acv
