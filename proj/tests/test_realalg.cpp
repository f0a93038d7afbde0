#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <acv/parser.hpp>
#include <acv/realalg.hpp>
#include <acv/solver.hpp>

#include <random>

using namespace acv;

namespace {

const Ring rc{{"c"}};
const Ring r2{{"z1", "z2"}};

UniPoly U(const std::string &text) {
  return to_unipoly(parse_polynomial(text, rc));
}

// independent root-count oracle: Sturm chain sign variations at ±∞
int sign_of(const Rat &x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

int sturm_count(const UniPoly &u) {
  std::vector<UniPoly> chain{u, uni_derivative(u)};
  while (!chain.back().empty() && uni_degree(chain.back()) > 0) {
    UniPoly r = uni_neg(uni_rem(chain[chain.size() - 2], chain.back()));
    if (r.empty()) break;
    chain.push_back(r);
  }
  auto variations = [&](int at_inf) {
    int var = 0, prev = 0;
    for (const auto &p : chain) {
      if (p.empty()) continue;
      int s = sign_of(p.back());
      if (at_inf < 0 && uni_degree(p) % 2 == 1) s = -s;
      if (prev != 0 && s != 0 && s != prev) ++var;
      if (s != 0) prev = s;
    }
    return var;
  };
  return variations(-1) - variations(+1);
}

UniPoly random_squarefree(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> coef(-9, 9);
  for (;;) {
    std::size_t deg = 1 + rng() % 12;
    UniPoly u(deg + 1);
    for (auto &c : u) c = Rat(coef(rng));
    while (!u.empty() && u.back() == 0) u.pop_back();
    if (u.size() < 2) continue;
    UniPoly s = squarefree_part(u);
    if (uni_degree(s) >= 1) return s;
  }
}

bool contains(const IsolatingInterval &iv, const Rat &x) {
  return iv.lo <= x && x <= iv.hi;
}

} // namespace

TEST_CASE("univariate conversions and arithmetic") {
  UniPoly u = U("c^2 - 2*c");
  REQUIRE(u.size() == 3);
  CHECK(u[0] == 0);
  CHECK(u[1] == -2);
  CHECK(u[2] == 1);
  CHECK(from_unipoly(u) == parse_polynomial("c^2 - 2*c", rc));
  CHECK(to_unipoly(Poly<Rat>(1)).empty());
  CHECK(uni_degree(U("0")) == 0);
  CHECK(uni_eval(u, Rat(3)) == 3);
  CHECK(uni_derivative(u) == U("2*c - 2"));
  CHECK(uni_mul(U("c - 1"), U("c + 1")) == U("c^2 - 1"));
  CHECK(uni_add(U("c^2"), U("-c^2 + c")) == U("c"));
  CHECK(uni_rem(U("c^3 - 1"), U("c - 1")).empty());
  CHECK(uni_rem(U("c^3"), U("c^2 + 1")) == U("-c"));
  CHECK(uni_gcd(U("c^2 - 1"), U("c^2 - 2*c + 1")) == U("c - 1"));
  CHECK(uni_normalize(U("1/2*c - 1/4")) == U("2*c - 1"));
  CHECK(uni_normalize(U("-3*c^2 + 6")) == U("c^2 - 2"));

  Ring rxy{{"x", "y"}};
  CHECK_THROWS_AS(to_unipoly(parse_polynomial("x*y", rxy)), DomainError);
}

TEST_CASE("square-free part") {
  CHECK(squarefree_part(U("c^3 - 2*c^2 + c")) == U("c^2 - c")); // c(c−1)²
  CHECK(squarefree_part(U("229*c^2 - 202*c - 27")) == U("229*c^2 - 202*c - 27"));
  CHECK(squarefree_part(U("7")) == U("1"));
  CHECK(squarefree_part(U("c^2")) == U("c"));
  CHECK(squarefree_part(U("4*c^2 - 4")) == U("c^2 - 1"));
}

TEST_CASE("real root isolation: worked examples") {
  // 229c² − 202c − 27 = (c − 1)(229c + 27): roots −27/229 and 1
  auto ivs = isolate_real_roots(U("229*c^2 - 202*c - 27"));
  REQUIRE(ivs.size() == 2);
  CHECK(contains(ivs[0], Rat(-27, 229)));
  CHECK(contains(ivs[1], Rat(1)));
  CHECK(ivs[0].hi < ivs[1].lo);
  CHECK_FALSE(contains(ivs[0], Rat(1)));

  CHECK(isolate_real_roots(U("c^2 + 1")).empty());

  auto ivs2 = isolate_real_roots(U("c^2 - 2*c"));
  REQUIRE(ivs2.size() == 2);
  CHECK(contains(ivs2[0], Rat(0)));
  CHECK(contains(ivs2[1], Rat(2)));

  CHECK(isolate_real_roots(U("5")).empty());
}

TEST_CASE("refinement") {
  auto roots = real_roots(U("3*c - 1"));
  REQUIRE(roots.size() == 1);
  AlgebraicNumber a = refine(roots[0], Rat(1, 1000000));
  CHECK(a.interval.width() <= Rat(1, 1000000));
  CHECK(a.interval.lo <= Rat(1, 3));
  CHECK(Rat(1, 3) <= a.interval.hi);
  AlgebraicNumber again = refine(a, Rat(1, 1000000));
  CHECK(again.interval.width() <= Rat(1, 1000000));
  CHECK(contains({again.interval.lo, again.interval.hi}, Rat(1, 3)));

  auto sq = real_roots(U("c^2 - 2"));
  REQUIRE(sq.size() == 2);
  AlgebraicNumber rt2 = refine(sq[1], Rat(1, 10000));
  CHECK(rt2.interval.lo > 0);
  CHECK(rt2.interval.lo * rt2.interval.lo < 2);
  CHECK(rt2.interval.hi * rt2.interval.hi > 2);
  CHECK(rt2.interval.lo >= Rat(1414, 1000));
  CHECK(rt2.interval.hi <= Rat(1415, 1000));
}

TEST_CASE("isolation count matches the Sturm oracle") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly u = random_squarefree(rng);
    auto ivs = isolate_real_roots(u);
    CHECK(static_cast<int>(ivs.size()) == sturm_count(u));
    // intervals are pairwise disjoint and ascending
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi < ivs[i + 1].lo);
    for (const auto &iv : ivs) CHECK(iv.lo <= iv.hi);
  }
}

TEST_CASE("algebraic number predicates") {
  UniPoly u = uni_mul(U("c^2 - 2"), U("c^2 - 3"));
  auto roots = real_roots(squarefree_part(u));
  REQUIRE(roots.size() == 4); // −√3 < −√2 < √2 < √3
  CHECK(sign_at(roots[0]) == -1);
  CHECK(sign_at(roots[1]) == -1);
  CHECK(sign_at(roots[2]) == 1);
  CHECK(sign_at(roots[3]) == 1);
  CHECK(vanishes_at(U("c^2 - 2"), roots[1]));
  CHECK(vanishes_at(U("c^2 - 2"), roots[2]));
  CHECK_FALSE(vanishes_at(U("c^2 - 2"), roots[3]));
  CHECK(vanishes_at(U("c^2 - 3"), roots[0]));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(compare(roots[i], roots[j]) == (i < j ? -1 : i > j ? 1 : 0));

  auto one = real_roots(U("c - 1"));
  REQUIRE(one.size() == 1);
  CHECK(sign_at(one[0]) == 1);
  CHECK(vanishes_at(U("c^3 - 1"), one[0]));

  auto zero = real_roots(U("c"));
  REQUIRE(zero.size() == 1);
  CHECK(sign_at(zero[0]) == 0);
}

TEST_CASE("interval arithmetic") {
  RatInterval a{Rat(1), Rat(2)}, b{Rat(-1), Rat(0)};
  CHECK(iv_add(a, b).lo == 0);
  CHECK(iv_add(a, b).hi == 2);
  CHECK(iv_sub(a, b).lo == 1);
  CHECK(iv_sub(a, b).hi == 3);
  CHECK(iv_mul(a, b).lo == -2);
  CHECK(iv_mul(a, b).hi == 0);
  CHECK(iv_pow(RatInterval{Rat(-2), Rat(1)}, 2).lo == 0);
  CHECK(iv_pow(RatInterval{Rat(-2), Rat(1)}, 2).hi == 4);
  CHECK(iv_pow(RatInterval{Rat(-2), Rat(1)}, 3).lo == -8);
  CHECK(iv_pow(RatInterval{Rat(-2), Rat(1)}, 3).hi == 1);

  // z1² − z2 over [1,2]×[0,1] is exactly [0,4]
  Poly<Rat> f = parse_polynomial("z1^2 - z2", r2);
  RatInterval r = eval_box(f, {a, RatInterval{Rat(0), Rat(1)}});
  CHECK(r.lo == 0);
  CHECK(r.hi == 4);
  CHECK(r.contains_zero());

  RatInterval s = uni_eval_box(U("c^2 - 2"), RatInterval{Rat(1), Rat(2)});
  CHECK(s.lo == -1);
  CHECK(s.hi == 2);
}

TEST_CASE("zero-dimensional real solving") {
  std::vector<Poly<Rat>> circle_line = {
      parse_polynomial("z1^2 + z2^2 - 1", r2), parse_polynomial("z1 - z2", r2)};
  RealSolutionSet s = zero_dim_real_solve(circle_line, 3);
  REQUIRE(s.roots.size() == 2); // (±1/√2, ±1/√2)
  auto boxes = solution_boxes(s, Rat(1, Int(10) * 10 * 10 * 10 * 10 * 10));
  REQUIRE(boxes.size() == 2);
  bool saw_neg = false, saw_pos = false;
  for (const auto &box : boxes) {
    REQUIRE(box.size() == 2);
    for (const auto &g : circle_line) CHECK(eval_box(g, box).contains_zero());
    // 2·z1² = 1 pins the coordinate
    RatInterval sq = iv_mul(iv_pow(box[0], 2), RatInterval{Rat(2), Rat(2)});
    CHECK(sq.lo < 1);
    CHECK(1 < sq.hi);
    (box[0].hi < 0 ? saw_neg : saw_pos) = true;
  }
  CHECK(saw_neg);
  CHECK(saw_pos);

  CHECK(zero_dim_real_solve({parse_polynomial("z1^2 + 1", r2),
                             parse_polynomial("z2", r2)}, 3).empty());

  RealSolutionSet origin = zero_dim_real_solve(
      {parse_polynomial("z1", r2), parse_polynomial("z2", r2)}, 3);
  REQUIRE(origin.roots.size() == 1);
  auto obox = solution_boxes(origin, Rat(1, 1000))[0];
  CHECK(obox[0].contains_zero());
  CHECK(obox[1].contains_zero());

  CHECK_THROWS_AS(zero_dim_real_solve({parse_polynomial("z1", r2)}, 3),
                  NotZeroDimensionalError);
}

TEST_CASE("solution boxes meet the residual tolerance") {
  // tight width: every generator must interval-evaluate to a box around 0
  std::vector<Poly<Rat>> gens = {parse_polynomial("z1^2 - 2", r2),
                                 parse_polynomial("z2^3 - z1", r2)};
  RealSolutionSet s = zero_dim_real_solve(gens, 5);
  REQUIRE(s.roots.size() == 2);
  Rat w = 1;
  for (int i = 0; i < 20; ++i) w /= 10; // 10⁻²⁰
  for (const auto &box : solution_boxes(s, w)) {
    for (const auto &iv : box) CHECK(iv.hi - iv.lo <= w);
    for (const auto &g : gens) CHECK(eval_box(g, box).contains_zero());
  }
}
