// Microbenchmarks for the hot kernels: polynomial arithmetic, Gröbner
// bases over Q and Fp, and one small end-to-end pipeline run.
#include <benchmark/benchmark.h>

#include <acv/acv.hpp>
#include <acv/groebner.hpp>
#include <acv/parser.hpp>

#include <random>

using namespace acv;

namespace {

const QField q;

Poly<Rat> dense_poly(std::size_t n, std::uint32_t d, std::uint64_t seed) {
  return make_family("dense", n, d, seed).f[0];
}

std::vector<Poly<Rat>> katsura(std::size_t n) {
  // classic zero-dimensional GB benchmark system
  Ring ring;
  for (std::size_t i = 0; i < n; ++i) ring.names.push_back("x" + std::to_string(i));
  auto X = [&](std::size_t i) { return var_poly(q, n, i); };
  std::vector<Poly<Rat>> gens;
  Poly<Rat> lin = X(0);
  for (std::size_t i = 1; i < n; ++i) lin = lin + scale(X(i), Rat(2));
  gens.push_back(
      lin - poly_from_terms(n, std::vector<Term<Rat>>{Term<Rat>{Monomial(n), Rat(1)}}));
  for (std::size_t m = 0; m + 1 < n; ++m) {
    Poly<Rat> s(n);
    for (long i = -long(n) + 1; i < long(n); ++i) {
      long j = long(m) - i;
      if (j <= -long(n) || j >= long(n)) continue;
      s = s + X(std::size_t(std::abs(i))) * X(std::size_t(std::abs(j)));
    }
    gens.push_back(s - X(m));
  }
  return gens;
}

void bm_poly_mul(benchmark::State &state) {
  std::size_t n = 4;
  Poly<Rat> a = dense_poly(n, 3, 1), b = dense_poly(n, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_mul);

void bm_poly_mul_large(benchmark::State &state) {
  std::size_t n = 5;
  Poly<Rat> a = dense_poly(n, 4, 3), b = dense_poly(n, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_mul_large);

void bm_gb_katsura_q(benchmark::State &state) {
  std::size_t n = std::size_t(state.range(0));
  auto gens = katsura(n);
  MonomialOrder ord = MonomialOrder::grevlex(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(groebner_basis(q, gens, ord, {}));
}
BENCHMARK(bm_gb_katsura_q)->Arg(3)->Arg(4);

void bm_gb_katsura_fp(benchmark::State &state) {
  std::size_t n = std::size_t(state.range(0));
  FpField fp(2147483647u);
  auto rational = katsura(n);
  std::vector<Poly<Fp>> gens;
  for (const auto &g : rational) {
    Poly<Fp> h(n);
    for (const auto &t : g.terms)
      h = h + poly_from_terms(n, std::vector<Term<Fp>>{
                                     Term<Fp>{t.m, fp.from_rat(t.c)}});
    gens.push_back(h);
  }
  MonomialOrder ord = MonomialOrder::grevlex(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(groebner_basis(fp, gens, ord, {}));
}
BENCHMARK(bm_gb_katsura_fp)->Arg(3)->Arg(4)->Arg(5);

void bm_acv_curve(benchmark::State &state) {
  Ring r2{{"z1", "z2"}};
  DominantMap f =
      DominantMap::of({parse_polynomial("z1^4 + (z1*z2 - 1)^2", r2)});
  Randomness rnd = draw_randomness(2, 1, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(acv_run(q, f, Variant::acv2, rnd));
}
BENCHMARK(bm_acv_curve)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
