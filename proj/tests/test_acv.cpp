#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <acv/acv.hpp>
#include <acv/parser.hpp>
#include <acv/realalg.hpp>

#include <algorithm>
#include <random>

using namespace acv;

namespace {

const QField q;

Poly<Rat> P(const std::string &text, const Ring &ring) {
  return parse_polynomial(text, ring);
}

bool in_ideal(const Poly<Rat> &f, const std::vector<Poly<Rat>> &G,
              const MonomialOrder &ord) {
  return normal_form(q, f, G, ord).is_zero();
}

bool same_ideal(const std::vector<Poly<Rat>> &A, const std::vector<Poly<Rat>> &B,
                std::size_t nv, const GBOptions &opts = {}) {
  MonomialOrder ord = MonomialOrder::grevlex(nv);
  auto GA = groebner_basis(q, A, ord, opts);
  auto GB = groebner_basis(q, B, ord, opts);
  for (const auto &g : B)
    if (!in_ideal(g, GA, ord)) return false;
  for (const auto &g : A)
    if (!in_ideal(g, GB, ord)) return false;
  return true;
}

bool plus_minus(const Poly<Rat> &a, const Poly<Rat> &b) {
  return a == b || a == scale(b, Rat(-1));
}

// identity randomness: A = I, r = 1, matching hand-derivable displays
Randomness identity_randomness(std::size_t n, std::size_t p) {
  Randomness rnd;
  rnd.seed = 0;
  rnd.bound = 99;
  rnd.A.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rnd.A[i][i] = 1;
  rnd.r.assign(p, std::vector<long>(n - p + 1, 1));
  rnd.a.assign(n, 1);
  return rnd;
}

// exact decision: the real root set of gen is exactly {0}
bool root_set_is_origin(const Poly<Rat> &gen) {
  UniPoly u = squarefree_part(to_unipoly(gen));
  auto ivs = isolate_real_roots(u);
  return ivs.size() == 1 && uni_eval(u, Rat(0)) == 0 &&
         ivs[0].lo <= 0 && 0 <= ivs[0].hi;
}

DominantMap msj_curve() {
  Ring r2{{"z1", "z2"}};
  return DominantMap::of({P("z1^4 + (z1*z2 - 1)^2", r2)});
}

DominantMap msj_surface() {
  Ring r3{{"z1", "z2", "z3"}};
  return DominantMap::of({P("z1*z2", r3), P("z1*z3", r3)});
}

} // namespace

TEST_CASE("dominance check") {
  Ring r2{{"z1", "z2"}};
  Ring r3{{"z1", "z2", "z3"}};
  CHECK(check_dominant(msj_surface()));
  CHECK(check_dominant(DominantMap::of({P("z1^2 + z2^2", r2)})));
  CHECK_FALSE(check_dominant(DominantMap::of({P("z1", r2), P("z1", r2)})));
  // rank drops only on a proper subset: still dominant
  CHECK(check_dominant(DominantMap::of({P("z1", r3), P("z1*z3", r3)})));
}

TEST_CASE("randomness drawing") {
  Randomness a = draw_randomness(3, 2, 42);
  Randomness b = draw_randomness(3, 2, 42);
  CHECK(a.A == b.A);
  CHECK(a.r == b.r);
  CHECK(a.a == b.a);
  CHECK(a.A.size() == 3);
  CHECK(a.r.size() == 2);
  CHECK(a.r[0].size() == 2); // n - p + 1
  for (const auto &row : a.r)
    for (long v : row) CHECK(v != 0);

  // tight bound forces redraws until the determinant is nonzero
  Randomness t = draw_randomness(3, 1, 7, 2);
  long det = 0;
  const auto &A = t.A;
  det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
        A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
        A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  CHECK(det != 0);
  for (const auto &row : t.A)
    for (long v : row) CHECK(std::abs(v) <= 2);

  (void)draw_randomness(3, 1, 8, 2); // distinct seed: just must not throw
  CHECK_THROWS_AS(draw_randomness(3, 1, 0, 1), DomainError);
}

TEST_CASE("degree bound formula") {
  CHECK(degree_bound(5, 1, 4) == 405);
  CHECK(degree_bound(25, 1, 4) == Int("1412147682405"));
  CHECK(degree_bound(4, 2, 1) == 0);
  CHECK(degree_bound(7, 3, 1) == 0);
  // benchmark-family rows: p = 1, d = deg of the family member
  CHECK(degree_bound(5, 1, 8) == 21609);     // g_5
  CHECK(degree_bound(4, 1, 15) == 43904);    // m_4
  CHECK(degree_bound(5, 1, 31) == 25920000); // m_5
  CHECK(degree_bound(20, 1, 2) == 3);
  CHECK(degree_bound(5, 1, 3) == 64);
  CHECK(degree_bound(7, 1, 3) == 256);
  CHECK(degree_bound(4, 1, 4) == 135);
  CHECK(degree_bound(6, 1, 4) == 1215);
  CHECK_THROWS_AS(degree_bound(3, 4, 2), DomainError);
  CHECK_THROWS_AS(degree_bound(3, 0, 2), DomainError);
  CHECK_THROWS_AS(degree_bound(3, 1, 0), DomainError);
}

TEST_CASE("benchmark families") {
  Ring r3{{"z1", "z2", "z3"}};
  Ring r2{{"z1", "z2"}};

  DominantMap f3 = make_family("f", 3);
  CHECK(f3.f[0] == P("z1^2 + (z1*z2 - 1)^2 + (z1*z3 - 1)^2", r3));

  DominantMap g3 = make_family("g", 3);
  CHECK(g3.f[0] == P("z2^2*z3^2 + z1^2*z3^2 + z1^2*z2^2", r3));

  DominantMap m2 = make_family("m", 2);
  CHECK(m2.f[0] == P("z1 + z1^2*z2", r2));

  CHECK(make_family("m", 4).d == 15);
  CHECK(make_family("m", 5).d == 31);
  CHECK(make_family("g", 5).d == 8);
  CHECK(make_family("f", 5).d == 4);

  DominantMap d35 = make_family("dense", 5, 3, 123);
  CHECK(d35.n == 5);
  CHECK(d35.d == 3);
  CHECK(check_dominant(d35));
  // reproducible from the seed, full support of degree ≤ 3
  CHECK(make_family("dense", 5, 3, 123).f[0] == d35.f[0]);
  std::size_t expect = 1;
  // C(5+3, 3) monomials of degree ≤ 3 in 5 variables
  expect = 56;
  CHECK(d35.f[0].terms.size() == expect);

  CHECK_THROWS_AS(make_family("nope", 3), DomainError);
}

TEST_CASE("Kuo distance") {
  DominantMap f = msj_curve();
  CHECK(kuo_distance_sq(f, {Rat(1), Rat(1)}) == 16);

  // along z(t) = (1/t, t) the scaled distance ‖z‖⁴·κ² equals (4/t⁵ + 4/t)²
  Rat t(10);
  Rat k2 = kuo_distance_sq(f, {1 / t, t});
  Rat norm2 = 1 / (t * t) + t * t;
  Rat expect = (4 / (t * t * t * t * t) + 4 / t);
  CHECK(norm2 * norm2 * k2 == expect * expect);

  Ring r1{{"z1"}};
  DominantMap lin = DominantMap::of({P("z1", r1)});
  CHECK(kuo_distance_sq(lin, {Rat(5)}) == 1);

  // p = 2: distance to the kernel-restricted differential, minimized over j
  DominantMap g = msj_surface();
  CHECK(kuo_distance_sq(g, {Rat(1), Rat(1), Rat(1)}) == Rat(3, 2));

  // both leading blocks vanish: no component admits the Cramer basis
  CHECK_THROWS_AS(kuo_distance_sq(g, {Rat(1), Rat(0), Rat(0)}), DomainError);
  CHECK_THROWS_AS(kuo_distance_sq(g, {Rat(1)}), DomainError);
}

TEST_CASE("system assembly: hand-checked displays") {
  DominantMap f = msj_curve();
  Randomness id = identity_randomness(2, 1);

  // layout z1, z2, c, u1, u2
  Ring rk{{"z1", "z2", "c", "u1", "u2"}};
  AcvSystem<Rat> kos = build_system(q, f, 1, id, Variant::kos);
  REQUIRE(kos.G.size() == 3);
  CHECK(plus_minus(kos.G[0], P("c*z1^4 - z1^4 + 2*z1^2*z2 - z2^2 - 1", rk)));
  CHECK(plus_minus(kos.G[1], P("u1*z1^4 + 2*z1^2*z2 - 2*z2^2 - 4", rk)));
  CHECK(plus_minus(kos.G[2], P("u2*z1^4 + 2*z1^2 - 2*z2", rk)));
  CHECK(kos.delta_cleared == P("z1", rk));
  CHECK(kos.nvars() == 5);

  Ring re{{"z1", "z2", "c", "e"}};
  AcvSystem<Rat> a1 = build_system(q, f, 1, id, Variant::acv1);
  REQUIRE(a1.G.size() == 3);
  CHECK(plus_minus(a1.G[0], P("c*z1^4 - z1^4 + 2*z1^2*z2 - z2^2 - 1", re)));
  CHECK(plus_minus(a1.G[1], P("e*z1^4 + 2*z1^2*z2 - 2*z2^2 - 4", re)));
  CHECK(plus_minus(a1.G[2], P("e*z1^4 + 2*z1^2 - 2*z2", re)));
  CHECK(a1.nvars() == 4);

  Ring rm{{"z1", "z2", "c"}};
  AcvSystem<Rat> a2 = build_system(q, f, 1, id, Variant::acv2);
  REQUIRE(a2.G.size() == 2);
  CHECK(plus_minus(a2.G[0], P("c*z1^4 - z1^4 + 2*z1^2*z2 - z2^2 - 1", rm)));
  CHECK(plus_minus(a2.G[1], P("2*z1^2*z2 - 2*z1^2 - 2*z2^2 + 2*z2 - 4", rm)));
  CHECK(a2.nvars() == 3);

  // p = 2 fixture; kernel vectors (0, δ, 0), (−z1, 0, z3) with δ = z3
  DominantMap g = msj_surface();
  Randomness id2 = identity_randomness(3, 2);
  Ring rg{{"z1", "z2", "z3", "c1", "c2", "u1", "u2"}};
  AcvSystem<Rat> kg = build_system(q, g, 1, id2, Variant::kos);
  REQUIRE(kg.G.size() == 4);
  CHECK(plus_minus(kg.G[0], P("c1*z1^2 - z2", rg)));
  CHECK(plus_minus(kg.G[1], P("c2*z1^2 - z3", rg)));
  CHECK(plus_minus(kg.G[2], P("u1*z1^2*z3 - z3", rg)));
  CHECK(plus_minus(kg.G[3], P("u2*z1^2*z3 + z2", rg)));
  CHECK(kg.delta_cleared == P("z1*z3", rg));

  CHECK_THROWS_AS(build_system(q, g, 0, id2, Variant::kos), DomainError);
  CHECK_THROWS_AS(build_system(q, g, 3, id2, Variant::kos), DomainError);
}

TEST_CASE("system assembly: p = 1 gradient specialization") {
  Ring r3{{"z1", "z2", "z3"}};
  DominantMap f = DominantMap::of({P("z1^3 + z2^2*z3 - z3 + 2*z1", r3)});
  Randomness rnd = draw_randomness(3, 1, 99);
  AcvSystem<Rat> sys = build_system(q, f, 1, rnd, Variant::acv2);

  std::size_t n = 3, nv = n + 1;
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rat(rnd.A[i][j]);
  std::vector<int> up = {0, 1, 2};
  Poly<Rat> fA = substitute_linear(q, remap_vars(f.f[0], nv, up), A, n);
  PolyMatrix<Rat> J = jacobian(std::vector<Poly<Rat>>{fA}, n);

  REQUIRE(sys.G.size() == 3);
  CHECK(sys.G[0] == tau1_numer(fA - var_poly(q, nv, n), n));
  for (std::size_t i = 1; i < 3; ++i) {
    Poly<Rat> expect =
        scale(J.at(0, 0), Rat(rnd.r[0][i])) - scale(J.at(0, i), Rat(rnd.r[0][0]));
    CHECK(plus_minus(sys.G[i], tau1_numer(expect, n)));
  }
  // δ = 1 for p = 1: the cleared denominator is z1 itself
  CHECK(sys.delta_cleared == var_poly(q, nv, 0));
}

TEST_CASE("end-to-end: curve with one asymptotic critical value") {
  DominantMap f = msj_curve();
  for (Variant v : {Variant::acv1, Variant::acv2, Variant::kos}) {
    AcvResult<Rat> res = acv_run(q, f, v, draw_randomness(2, 1, 5));
    REQUIRE(res.generators.size() == 1);
    CHECK(root_set_is_origin(res.generators[0]));
  }
}

TEST_CASE("end-to-end: surface pair") {
  DominantMap g = msj_surface();
  Ring rc{{"c1", "c2"}};
  std::vector<Poly<Rat>> cc = {P("c1", rc), P("c2", rc)};

  // the slack-sliced pipelines cut the candidate set down to the origin
  for (Variant v : {Variant::acv1, Variant::kos}) {
    AcvResult<Rat> res = acv_run(q, g, v, draw_randomness(3, 2, 5));
    CHECK(same_ideal(res.generators, cc, 2));
  }

  // the minors pipeline keeps a one-dimensional superset: every generator
  // still vanishes at the origin and lies in ⟨c1, c2⟩
  AcvResult<Rat> res = acv_run(q, g, Variant::acv2, draw_randomness(3, 2, 5));
  REQUIRE_FALSE(res.generators.empty());
  MonomialOrder ord = MonomialOrder::grevlex(2);
  for (const auto &gen : res.generators) {
    CHECK_FALSE(gen.is_zero());
    CHECK(in_ideal(gen, cc, ord));
  }
  // and it contains the sliced variants' answer set
  AcvResult<Rat> sliced = acv_run(q, g, Variant::acv1, draw_randomness(3, 2, 5));
  for (const auto &gen : res.generators)
    CHECK(in_ideal(gen, sliced.generators, ord));
}

TEST_CASE("end-to-end: proper map has no asymptotic critical values") {
  Ring r2{{"z1", "z2"}};
  DominantMap f = DominantMap::of({P("z1^2 + z2^2", r2)});

  // oracle: the slack-graph baseline over every chart/component pair; a
  // chart permutation conjugates the map, so run the baseline on each
  for (std::size_t s = 0; s < 2; ++s) {
    std::vector<int> perm = s == 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
    std::vector<std::vector<Rat>> Pm(2, std::vector<Rat>(2, Rat(0)));
    for (std::size_t i = 0; i < 2; ++i) Pm[i][perm[i]] = 1;
    DominantMap fs = DominantMap::of({substitute_linear(q, f.f[0], Pm, 2)});
    AcvResult<Rat> base = acv_run(q, fs, Variant::kos, draw_randomness(2, 1, 17));
    REQUIRE(base.generators.size() == 1);
    CHECK(base.generators[0].is_constant());
    CHECK_FALSE(base.generators[0].is_zero());
  }

  AcvResult<Rat> res = acv_run(q, f, Variant::acv2, draw_randomness(2, 1, 17));
  REQUIRE(res.generators.size() == 1);
  CHECK(res.generators[0].is_constant());
  CHECK_FALSE(res.generators[0].is_zero());

  CHECK_THROWS_AS(
      acv_run(q, DominantMap::of({P("z1", r2), P("z1", r2)}), Variant::acv2,
              draw_randomness(2, 2, 1)),
      DomainError);
}

TEST_CASE("end-to-end: divisibility, vanishing and degree bound") {
  DominantMap f3 = make_family("f", 3);
  Randomness rnd = draw_randomness(3, 1, 11);

  UniPoly a1 = to_unipoly(acv_run(q, f3, Variant::acv1, rnd).generators[0]);
  UniPoly a2 = to_unipoly(acv_run(q, f3, Variant::acv2, rnd).generators[0]);

  // the sliced pipeline's output divides the minors pipeline's output
  CHECK(uni_rem(a2, a1).empty());
  CHECK(uni_degree(a2) <= 45); // degree_bound(3, 1, 4)
  CHECK(degree_bound(3, 1, 4) == 45);

  // the known value 0 survives every seed; so does the gcd across seeds
  UniPoly b2 = to_unipoly(acv_run(q, f3, Variant::acv2,
                                  draw_randomness(3, 1, 12)).generators[0]);
  CHECK(uni_eval(a2, Rat(0)) == 0);
  CHECK(uni_eval(b2, Rat(0)) == 0);
  UniPoly g = uni_gcd(a2, b2);
  CHECK(uni_degree(g) >= 1);
  CHECK(uni_eval(g, Rat(0)) == 0);
}

TEST_CASE("modular run agrees with the rational run") {
  DominantMap f = msj_curve();
  Randomness rnd = draw_randomness(2, 1, 5);
  AcvResult<Rat> exact = acv_run(q, f, Variant::acv2, rnd);
  AcvResult<Rat> mod = acv_run_modular(f, Variant::acv2, rnd);
  REQUIRE(mod.generators.size() == exact.generators.size());
  for (std::size_t i = 0; i < mod.generators.size(); ++i)
    CHECK(mod.generators[i] == exact.generators[i]);
  // two combined primes plus one verification prime
  CHECK(mod.primes.size() == 3);
  CHECK(mod.primes[0] == 2147483647u);
}

TEST_CASE("minors identity: eliminating the slack variable") {
  // eliminating e from the slack system yields exactly the minors system
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> coef(-5, 5);
  GBOptions lim;
  lim.max_pairs = 20000;
  lim.max_coeff_bits = 4096;
  int tested = 0;
  for (int trial = 0; tested < 8 && trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 3;
    std::size_t p = 1 + rng() % 2;
    if (p >= n) p = 1;
    std::vector<Poly<Rat>> comps;
    for (std::size_t i = 0; i < p; ++i) {
      Poly<Rat> fi(n);
      for (int t = 0; t < 4; ++t) {
        Monomial m(n);
        std::uint32_t deg = rng() % 4;
        for (std::uint32_t d = 0; d < deg; ++d) m.e[rng() % n] += 1;
        fi = fi + poly_from_terms(n, std::vector<Term<Rat>>{Term<Rat>{m, Rat(coef(rng))}});
      }
      if (fi.is_zero()) fi = var_poly(q, n, i);
      comps.push_back(fi);
    }
    DominantMap f = DominantMap::of(comps);
    if (!check_dominant(f)) continue;
    Randomness rnd = draw_randomness(n, p, 1000 + trial, 9);
    AcvSystem<Rat> sysE, sysM;
    try {
      sysE = build_system(q, f, 1, rnd, Variant::acv1);
      sysM = build_system(q, f, 1, rnd, Variant::acv2);
    } catch (const DegenerateError &) {
      continue;
    }
    try {
      std::vector<Poly<Rat>> E = eliminate(q, sysE.G, {n + p}, lim);
      std::vector<int> down(n + p + 1, -1);
      for (std::size_t i = 0; i < n + p; ++i) down[i] = static_cast<int>(i);
      std::vector<Poly<Rat>> Er;
      for (const auto &g : E) Er.push_back(remap_vars(g, n + p, down));
      CHECK(same_ideal(Er, sysM.G, n + p, lim));
      ++tested;
    } catch (const ResourceLimitError &) {
      continue; // coefficient blow-up: skip the instance, draw another
    }
  }
  CHECK(tested >= 5);
}

TEST_CASE("subset identity: two-row minors from a single column") {
  // ⟨all 2×2 minors of [r; v]⟩ = ⟨r_i v_1 − r_1 v_i⟩ whenever r_1 ≠ 0
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 3, k = 4;
    std::vector<Poly<Rat>> v;
    for (std::size_t i = 0; i < k; ++i) {
      Poly<Rat> fi(n);
      for (int t = 0; t < 3; ++t) {
        Monomial m(n);
        std::uint32_t deg = rng() % 3;
        for (std::uint32_t d = 0; d < deg; ++d) m.e[rng() % n] += 1;
        fi = fi + poly_from_terms(n, std::vector<Term<Rat>>{Term<Rat>{m, Rat(coef(rng))}});
      }
      v.push_back(fi);
    }
    std::vector<Rat> r(k);
    for (auto &x : r)
      do
        x = Rat(coef(rng));
      while (x == 0);
    std::vector<Poly<Rat>> all, subset;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        all.push_back(scale(v[i], r[j]) - scale(v[j], r[i]));
    for (std::size_t i = 1; i < k; ++i)
      subset.push_back(scale(v[0], r[i]) - scale(v[i], r[0]));
    CHECK(same_ideal(all, subset, n));
  }
}

TEST_CASE("saturation and slack elimination commute") {
  for (DominantMap f : {msj_curve(), msj_surface()}) {
    Randomness rnd = draw_randomness(f.n, f.p, 7, 9);
    AcvSystem<Rat> sys = build_system(q, f, 1, rnd, Variant::acv1);
    std::size_t nv = sys.nvars(), e = f.n + f.p;
    auto sat_first = eliminate(
        q, saturate_rabinowitsch(q, sys.G, sys.delta_cleared, {}), {e}, {});
    auto elim_first = saturate_rabinowitsch(
        q, eliminate(q, sys.G, {e}, {}), sys.delta_cleared, {});
    std::vector<int> down(nv, -1);
    for (std::size_t i = 0; i < e; ++i) down[i] = static_cast<int>(i);
    std::vector<Poly<Rat>> A, B;
    for (const auto &g : sat_first) A.push_back(remap_vars(g, e, down));
    for (const auto &g : elim_first) B.push_back(remap_vars(g, e, down));
    CHECK(same_ideal(A, B, e));
  }
}
