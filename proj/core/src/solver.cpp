#include "acv/solver.hpp"

#include <random>

namespace acv {

namespace {

Rat pow10_inv(unsigned k) {
  Int d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
  return Rat(Int(1), d);
}

// box of one solution in the original coordinates at eliminant width w
std::vector<RatInterval> box_at(const RealSolutionSet &s,
                                const AlgebraicNumber &root, const Rat &w) {
  AlgebraicNumber t = refine(root, w);
  RatInterval ti{t.interval.lo, t.interval.hi};
  std::vector<RatInterval> y(s.n);
  for (std::size_t i = 0; i + 1 < s.n; ++i) y[i] = uni_eval_box(s.lifts[i], ti);
  y[s.n - 1] = ti;
  std::vector<RatInterval> x(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    RatInterval acc{Rat(0), Rat(0)};
    for (std::size_t j = 0; j < s.n; ++j) {
      Rat m(s.M[i][j]);
      acc = iv_add(acc, iv_mul(RatInterval{m, m}, y[j]));
    }
    x[i] = acc;
  }
  return x;
}

std::vector<RatInterval> box_to_width(const RealSolutionSet &s,
                                      const AlgebraicNumber &root,
                                      const Rat &width) {
  Rat w = width;
  for (;;) {
    std::vector<RatInterval> x = box_at(s, root, w);
    bool ok = true;
    for (const auto &iv : x)
      if (iv.hi - iv.lo > width) ok = false;
    if (ok) return x;
    w /= 16;
  }
}

} // namespace

std::vector<std::vector<RatInterval>>
solution_boxes(const RealSolutionSet &s, const Rat &width) {
  std::vector<std::vector<RatInterval>> out;
  for (const auto &r : s.roots) out.push_back(box_to_width(s, r, width));
  return out;
}

RealSolutionSet zero_dim_real_solve(const std::vector<Poly<Rat>> &gens,
                                    std::uint64_t seed, const GBOptions &opts) {
  if (gens.empty()) throw DomainError("empty system");
  QField q;
  std::size_t n = gens[0].nv;
  std::string last_failure = "shape position not reached";
  for (int attempt = 0; attempt < 2; ++attempt) {
    // unit lower-triangular: always invertible, and the last row of M⁻¹ is
    // a generic linear form, so y_n generically separates the solutions
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::uniform_int_distribution<long> pick(-5, 5);
    std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      M[i][i] = 1;
      for (std::size_t j = 0; j < i; ++j) M[i][j] = pick(rng);
    }
    std::vector<std::vector<Rat>> Mr(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) Mr[i][j] = Rat(M[i][j]);
    std::vector<Poly<Rat>> sub;
    for (const auto &g : gens) sub.push_back(substitute_linear(q, g, Mr, n));

    std::vector<Poly<Rat>> G =
        groebner_basis(q, sub, MonomialOrder::lex(n), opts);
    if (is_unit_ideal(G)) {
      RealSolutionSet s;
      s.n = n;
      s.M = M;
      s.eliminant = {Rat(1)};
      s.lifts.assign(n ? n - 1 : 0, UniPoly{});
      return s; // no solutions at all
    }
    // locate the univariate eliminant in the last variable
    const Poly<Rat> *elim = nullptr;
    for (const auto &g : G) {
      bool only_last = true;
      for (std::size_t v = 0; v + 1 < n && only_last; ++v)
        if (g.depends_on(v)) only_last = false;
      if (only_last && g.depends_on(n - 1)) elim = &g;
    }
    if (!elim)
      throw NotZeroDimensionalError(
          "lex basis has no univariate eliminant; the ideal is not "
          "zero-dimensional");
    // shape position: besides the eliminant, exactly one generator per
    // remaining variable of the form y_i − g_i(y_n)
    bool shape = G.size() == n;
    std::vector<UniPoly> lifts(n > 0 ? n - 1 : 0);
    std::vector<bool> seen(n, false);
    if (shape) {
      for (const auto &g : G) {
        if (&g == elim) continue;
        // leading variable: smallest index present
        std::size_t lead = n;
        for (std::size_t v = 0; v < n; ++v)
          if (g.depends_on(v)) {
            lead = v;
            break;
          }
        if (lead + 1 >= n || seen[lead] || g.degree_in(lead) != 1) {
          shape = false;
          break;
        }
        Poly<Rat> head(n), tail(n);
        for (const auto &t : g.terms) {
          bool others = false;
          for (std::size_t v = 0; v + 1 < n; ++v)
            if (v != lead && t.m.e[v]) others = true;
          if (others) {
            shape = false;
            break;
          }
          if (t.m.e[lead])
            head.terms.push_back(t);
          else
            tail.terms.push_back(t);
        }
        if (!shape) break;
        normalize_terms(head);
        normalize_terms(tail);
        // head must be a constant multiple of y_lead
        if (head.terms.size() != 1 || head.terms[0].m.degree() != 1) {
          shape = false;
          break;
        }
        Rat c = head.terms[0].c;
        std::vector<int> down(n, -1);
        down[n - 1] = 0;
        UniPoly gi =
            to_unipoly(remap_vars(scale(tail, Rat(Rat(-1) / c)), 1, down));
        lifts[lead] = std::move(gi);
        seen[lead] = true;
      }
      for (std::size_t v = 0; v + 1 < n && shape; ++v)
        if (!seen[v]) shape = false;
    }
    if (!shape) {
      last_failure = "lex basis is not in shape position";
      continue;
    }
    std::vector<int> down(n, -1);
    down[n - 1] = 0;
    UniPoly qe = to_unipoly(remap_vars(*elim, 1, down));
    RealSolutionSet s;
    s.n = n;
    s.M = M;
    s.eliminant = squarefree_part(qe);
    s.lifts = std::move(lifts);
    s.roots = real_roots(s.eliminant);
    // residual certification of every lifted point on the input system
    Rat w = pow10_inv(20);
    bool certified = true;
    for (const auto &root : s.roots) {
      std::vector<RatInterval> x = box_to_width(s, root, w);
      for (const auto &g : gens)
        if (!eval_box(g, x).contains_zero()) certified = false;
    }
    if (!certified) {
      last_failure = "lifted point failed the residual interval check";
      continue;
    }
    return s;
  }
  throw ShapeError(last_failure);
}

} // namespace acv
