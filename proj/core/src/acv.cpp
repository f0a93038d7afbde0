#include "acv/acv.hpp"

#include <random>

#include "acv/modular.hpp"

namespace acv {

std::string variant_name(Variant v) {
  switch (v) {
  case Variant::acv1: return "acv1";
  case Variant::acv2: return "acv2";
  case Variant::kos: return "kos";
  }
  return "?";
}

namespace {

Int int_matrix_det(const std::vector<std::vector<long>> &A) {
  std::size_t n = A.size();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = A[i][j];
  // Bareiss
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n ? Int(sign) * a[n - 1][n - 1] : Int(1);
}

std::size_t rank_rat(std::vector<std::vector<Rat>> m) {
  std::size_t rows = m.size();
  if (!rows) return 0;
  std::size_t cols = m[0].size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat t = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= t * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// solves the square system M x = y by Gaussian elimination; M invertible
std::vector<Rat> solve_rat(std::vector<std::vector<Rat>> m,
                           std::vector<Rat> y) {
  std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("singular system");
    std::swap(m[c], m[piv]);
    std::swap(y[c], y[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat t = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= t * m[c][j];
      y[i] -= t * y[c];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / m[i][i];
  return x;
}

template <class F>
Poly<typename F::Elem> to_field(const F &field, const Poly<Rat> &f) {
  if constexpr (std::is_same_v<F, QField>) {
    (void)field;
    return f;
  } else {
    return to_prime_field(field, f);
  }
}

template <class F>
Poly<typename F::Elem> emit_normalize(const F &field,
                                      const Poly<typename F::Elem> &f) {
  if constexpr (std::is_same_v<F, QField>) {
    (void)field;
    return normalize_integer(f);
  } else {
    return make_monic(field, f);
  }
}

} // namespace

bool check_dominant(const DominantMap &f) {
  QField q;
  PolyMatrix<Rat> J = jacobian(f.f, f.n);
  // cheap witness first: rank at a fixed pseudo-random rational point
  std::mt19937_64 rng(0x5eed5eed5eedULL);
  std::uniform_int_distribution<long> pick(-50, 50);
  std::vector<Rat> pt(f.n);
  for (auto &v : pt) v = Rat(pick(rng));
  std::vector<std::vector<Rat>> M(f.p, std::vector<Rat>(f.n));
  for (std::size_t i = 0; i < f.p; ++i)
    for (std::size_t j = 0; j < f.n; ++j) M[i][j] = eval(q, J.at(i, j), pt);
  if (rank_rat(M) == f.p) return true;
  // symbolic fallback: some p×p minor must be a nonzero polynomial
  std::vector<std::size_t> cols(f.p);
  for (std::size_t i = 0; i < f.p; ++i) cols[i] = i;
  for (;;) {
    PolyMatrix<Rat> S;
    S.rows = S.cols = f.p;
    for (std::size_t i = 0; i < f.p; ++i)
      for (std::size_t j = 0; j < f.p; ++j)
        S.entries.push_back(J.at(i, cols[j]));
    if (!det_fraction_free(q, S).is_zero()) return true;
    // next combination
    std::size_t k = f.p;
    while (k > 0 && cols[k - 1] == f.n - f.p + (k - 1)) --k;
    if (k == 0) return false;
    ++cols[k - 1];
    for (std::size_t i = k; i < f.p; ++i) cols[i] = cols[i - 1] + 1;
  }
}

Randomness draw_randomness(std::size_t n, std::size_t p, std::uint64_t seed,
                           long bound) {
  if (bound < 2) throw DomainError("sampling bound too small");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-bound, bound);
  Randomness rnd;
  rnd.seed = seed;
  rnd.bound = bound;
  do {
    rnd.A.assign(n, std::vector<long>(n));
    for (auto &row : rnd.A)
      for (auto &v : row) v = pick(rng);
  } while (int_matrix_det(rnd.A) == 0);
  rnd.r.assign(p, std::vector<long>(n - p + 1));
  for (auto &row : rnd.r)
    for (auto &v : row) {
      do
        v = pick(rng);
      while (v == 0);
    }
  rnd.a.assign(n, 0);
  for (auto &v : rnd.a) v = pick(rng);
  return rnd;
}

Int degree_bound(std::size_t n, std::size_t p, std::uint32_t d) {
  if (p < 1 || p > n || d < 1) throw DomainError("degree_bound arguments");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(n - p + 1));
  Int a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(d - 1),
                static_cast<unsigned long>(n - p));
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(d + 1),
                static_cast<unsigned long>(p));
  return r * a * b;
}

Rat kuo_distance_sq(const DominantMap &f, const std::vector<Rat> &x) {
  QField q;
  if (x.size() != f.n) throw DomainError("point arity mismatch");
  PolyMatrix<Rat> J = jacobian(f.f, f.n);
  std::vector<std::vector<Rat>> M(f.p, std::vector<Rat>(f.n));
  for (std::size_t i = 0; i < f.p; ++i)
    for (std::size_t j = 0; j < f.n; ++j) M[i][j] = eval(q, J.at(i, j), x);
  bool have = false;
  Rat best;
  for (std::size_t j = 1; j <= f.p; ++j) {
    const std::vector<Rat> &g = M[j - 1];
    Rat norm2;
    if (f.p == 1) {
      norm2 = 0;
      for (const auto &v : g) norm2 += v * v;
    } else {
      // numeric kernel basis shares the pipeline's Cramer construction
      PolyMatrix<Rat> Jj;
      Jj.rows = f.p - 1;
      Jj.cols = f.n;
      for (std::size_t i = 0; i < f.p; ++i) {
        if (i == j - 1) continue;
        for (std::size_t k = 0; k < f.n; ++k)
          Jj.entries.push_back(constant_poly(q, 0, M[i][k]));
      }
      std::vector<std::vector<Fraction<Rat>>> basis;
      Poly<Rat> delta;
      try {
        std::tie(basis, delta) = kernel_basis_cramer(q, Jj, 0);
      } catch (const DegenerateError &) {
        continue; // δ_j(x) = 0: skip this j
      }
      std::size_t k = basis.size();
      // spans only matter, so use the numerators as the basis vectors
      std::vector<std::vector<Rat>> b(k, std::vector<Rat>(f.n, Rat(0)));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < f.n; ++i)
          if (!basis[a][i].num.is_zero()) b[a][i] = basis[a][i].num.terms[0].c;
      std::vector<std::vector<Rat>> gram(k, std::vector<Rat>(k, Rat(0)));
      std::vector<Rat> y(k, Rat(0));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t c = 0; c < k; ++c)
          for (std::size_t i = 0; i < f.n; ++i)
            gram[a][c] += b[a][i] * b[c][i];
        for (std::size_t i = 0; i < f.n; ++i) y[a] += b[a][i] * g[i];
      }
      std::vector<Rat> coef = solve_rat(gram, y);
      norm2 = 0;
      for (std::size_t a = 0; a < k; ++a) norm2 += coef[a] * y[a];
    }
    if (!have || norm2 < best) {
      best = norm2;
      have = true;
    }
  }
  if (!have) throw DomainError("kernel degenerate at the point for every j");
  return best;
}

template <class F>
AcvSystem<typename F::Elem> build_system(const F &field, const DominantMap &f,
                                         std::size_t j, const Randomness &rnd,
                                         Variant variant) {
  using K = typename F::Elem;
  if (j < 1 || j > f.p) throw DomainError("component index out of range");
  std::size_t n = f.n, p = f.p, k = n - p + 1;
  std::size_t nextra = variant == Variant::acv1 ? 1
                       : variant == Variant::kos ? k
                                                 : 0;
  std::size_t nv = n + p + nextra;

  // f^A in the working ambient
  std::vector<std::vector<K>> A(n, std::vector<K>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c)
      A[i][c] = field.from_int(Int(rnd.A[i][c]));
  std::vector<int> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
  std::vector<Poly<K>> fA;
  for (const auto &comp : f.f) {
    Poly<K> g = remap_vars(to_field(field, comp), nv, up);
    fA.push_back(substitute_linear(field, g, A, n));
  }

  PolyMatrix<K> J = jacobian(fA, n);
  PolyMatrix<K> Jj = remove_row(J, j);
  auto [basis, delta] = kernel_basis_cramer(field, Jj, nv);

  // ν_i = δ·v_i = ∇f_j^A · (numerators of the i-th kernel vector)
  std::vector<Poly<K>> nu(k, Poly<K>(nv));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c)
      nu[i] = nu[i] + J.at(j - 1, c) * basis[i][c].num;

  const std::vector<long> &r = rnd.r[j - 1];
  auto rk = [&](std::size_t i) {
    return constant_poly(field, nv, field.from_int(Int(r[i])));
  };
  Poly<K> z1 = var_poly(field, nv, 0);

  AcvSystem<K> sys;
  sys.j = j;
  sys.variant = variant;
  sys.nz = n;
  sys.nc = p;
  sys.nextra = nextra;
  for (std::size_t i = 0; i < p; ++i)
    sys.G.push_back(tau1_numer(fA[i] - var_poly(field, nv, n + i), n));
  switch (variant) {
  case Variant::acv1: {
    Poly<K> e = var_poly(field, nv, n + p);
    for (std::size_t i = 0; i < k; ++i)
      sys.G.push_back(tau1_numer(z1 * nu[i] - rk(i) * e * delta, n));
    break;
  }
  case Variant::acv2:
    for (std::size_t i = 1; i < k; ++i)
      sys.G.push_back(tau1_numer(rk(i) * nu[0] - rk(0) * nu[i], n));
    break;
  case Variant::kos:
    for (std::size_t i = 0; i < k; ++i) {
      Poly<K> u = var_poly(field, nv, n + p + i);
      sys.G.push_back(tau1_numer(z1 * nu[i] - u * delta, n));
    }
    break;
  }
  sys.delta_cleared = z1 * tau1_numer(delta, n);
  return sys;
}

template <class F>
AcvResult<typename F::Elem> acv_run(const F &field, const DominantMap &f,
                                    Variant variant, const Randomness &rnd,
                                    const AcvOptions &opts) {
  using K = typename F::Elem;
  if (!check_dominant(f)) throw DomainError("map is not dominant");
  std::size_t n = f.n, p = f.p;
  Randomness cur = rnd;
  for (int attempt = 0;; ++attempt) {
    try {
      AcvResult<K> res;
      res.variant = variant;
      res.randomness = cur;
      for (std::size_t j = 1; j <= p; ++j) {
        AcvSystem<K> sys = build_system(field, f, j, cur, variant);
        std::size_t nv = sys.nvars();
        Poly<K> delta_tau =
            tau1_clear_poly(sys.delta_cleared, n); // strips the z₁ factor
        SatStrategy strat = opts.saturation;
        if (strat == SatStrategy::automatic)
          strat = p == 1 ? SatStrategy::bayer : SatStrategy::rabinowitsch;
        std::vector<Poly<K>> S;
        if (strat == SatStrategy::bayer) {
          S = saturate_bayer(field, sys.G, 0, opts.gb);
          if (!delta_tau.is_constant())
            S = saturate_rabinowitsch(field, S, delta_tau, opts.gb);
        } else {
          S = saturate_rabinowitsch(field, sys.G, sys.delta_cleared, opts.gb);
        }
        // slice with {z₁ = 0} and the auxiliary directions
        S.push_back(var_poly(field, nv, 0));
        for (std::size_t i = 0; i < sys.nextra; ++i)
          S.push_back(var_poly(field, nv, n + p + i));
        std::vector<std::size_t> drop;
        for (std::size_t v = 0; v < n; ++v) drop.push_back(v);
        for (std::size_t v = n + p; v < nv; ++v) drop.push_back(v);
        std::vector<Poly<K>> el = eliminate(field, S, drop, opts.gb);
        std::vector<int> down(nv, -1);
        for (std::size_t i = 0; i < p; ++i) down[n + i] = static_cast<int>(i);
        std::vector<Poly<K>> Vj;
        for (const auto &g : el)
          if (!g.is_zero()) Vj.push_back(remap_vars(g, p, down));
        if (Vj.empty())
          throw PipelineError(
              "per-component elimination produced the zero ideal");
        res.per_j.push_back(std::move(Vj));
      }
      std::vector<Poly<K>> inter =
          p == 1 ? res.per_j[0] : intersect(field, res.per_j, p, opts.gb);
      if (inter.empty())
        throw PipelineError("intersection produced the zero ideal");
      for (const auto &g : inter)
        res.generators.push_back(emit_normalize(field, g));
      return res;
    } catch (const DegenerateError &) {
      if (attempt >= opts.max_redraws) throw;
    } catch (const PipelineError &) {
      if (attempt >= opts.max_redraws) throw;
    }
    cur = draw_randomness(n, p, cur.seed + 0x9e3779b97f4a7c15ULL, cur.bound);
  }
}

template AcvSystem<Rat> build_system<QField>(const QField &,
                                             const DominantMap &, std::size_t,
                                             const Randomness &, Variant);
template AcvSystem<Fp> build_system<FpField>(const FpField &,
                                             const DominantMap &, std::size_t,
                                             const Randomness &, Variant);
template AcvResult<Rat> acv_run<QField>(const QField &, const DominantMap &,
                                        Variant, const Randomness &,
                                        const AcvOptions &);
template AcvResult<Fp> acv_run<FpField>(const FpField &, const DominantMap &,
                                        Variant, const Randomness &,
                                        const AcvOptions &);

namespace {

// support signature used to align per-prime outputs
std::vector<std::vector<std::vector<std::uint32_t>>>
support_of(const std::vector<Poly<Fp>> &gens) {
  std::vector<std::vector<std::vector<std::uint32_t>>> s;
  for (const auto &g : gens) {
    std::vector<std::vector<std::uint32_t>> t;
    for (const auto &term : g.terms) t.push_back(term.m.e);
    s.push_back(std::move(t));
  }
  return s;
}

} // namespace

AcvResult<Rat> acv_run_modular(const DominantMap &f, Variant variant,
                               const Randomness &rnd,
                               const ModularOptions &opts) {
  std::uint32_t prime = 2147483647u + 1u; // next_below yields 2^31−1 first
  std::vector<std::pair<std::vector<Poly<Fp>>, std::uint32_t>> runs;
  std::vector<std::vector<std::vector<std::uint32_t>>> signature;
  std::size_t tried = 0;
  auto next_run = [&]() {
    for (;;) {
      if (++tried > opts.max_primes)
        throw PipelineError("modular run exhausted its prime budget");
      prime = next_word_prime_below(prime);
      FpField field{prime};
      try {
        AcvResult<Fp> r = acv_run(field, f, variant, rnd, opts.acv);
        if (signature.empty()) {
          signature = support_of(r.generators);
        } else if (support_of(r.generators) != signature) {
          continue; // unlucky prime: support disagrees with the first run
        }
        runs.emplace_back(r.generators, prime);
        return;
      } catch (const DomainError &) {
        continue; // prime divides a denominator or degenerates the setup
      } catch (const DegenerateError &) {
        continue;
      }
    }
  };

  while (runs.size() < opts.primes) next_run();

  for (;;) {
    std::size_t runs_at_start = runs.size();
    // combine per generator and reconstruct
    std::size_t ngen = runs[0].first.size();
    std::vector<Poly<Rat>> out;
    bool ok = true;
    for (std::size_t g = 0; g < ngen && ok; ++g) {
      std::vector<std::pair<Poly<Fp>, std::uint32_t>> images;
      for (const auto &run : runs) images.emplace_back(run.first[g], run.second);
      Int modulus;
      Poly<Int> comb = crt_combine(images, modulus);
      auto rec = rational_reconstruct(comb, modulus);
      if (!rec) {
        ok = false;
        break;
      }
      out.push_back(*rec);
    }
    if (ok && opts.verify) {
      // one extra prime: its direct run must match the reconstruction
      std::size_t before = runs.size();
      next_run();
      const auto &[check_gens, check_p] = runs[before];
      FpField field{check_p};
      for (std::size_t g = 0; g < ngen && ok; ++g) {
        try {
          Poly<Fp> image = make_monic(field, to_prime_field(field, out[g]));
          if (!(image == check_gens[g])) ok = false;
        } catch (const DomainError &) {
          ok = false; // denominator hit; the extra prime still joins the CRT
        }
      }
    }
    if (ok) {
      AcvResult<Rat> res;
      res.variant = variant;
      res.randomness = rnd;
      for (const auto &g : out) res.generators.push_back(normalize_integer(g));
      for (const auto &run : runs) res.primes.push_back(run.second);
      return res;
    }
    if (runs.size() == runs_at_start) next_run(); // widen the modulus
  }
}

} // namespace acv
