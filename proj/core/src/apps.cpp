#include "acv/apps.hpp"

namespace acv {

namespace {

Rat pow10_inv(unsigned k) {
  Int d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
  return Rat(Int(1), d);
}

AlgebraicNumber exact_number(const Rat &r) {
  return {{-r, Rat(1)}, {r, r}};
}

UniPoly squarefree_or_one(const UniPoly &q) {
  return q.empty() ? UniPoly{Rat(1)} : squarefree_part(q);
}

} // namespace

UniPoly critical_values_poly(const Poly<Rat> &f, const GBOptions &opts) {
  QField q;
  std::size_t n = f.nv;
  if (f.is_constant()) throw DomainError("constant objective");
  std::vector<int> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
  std::vector<Poly<Rat>> gens;
  gens.push_back(remap_vars(f, n + 1, up) - var_poly(q, n + 1, n));
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(remap_vars(derivative(f, i), n + 1, up));
  std::vector<std::size_t> drop(n);
  for (std::size_t i = 0; i < n; ++i) drop[i] = i;
  std::vector<Poly<Rat>> el = eliminate(q, gens, drop, opts);
  if (el.empty())
    throw PipelineError("critical-values elimination degenerate: the "
                        "eliminant in c is zero");
  // univariate elimination ideal is principal; the reduced basis is it
  std::vector<int> down(n + 1, -1);
  down[n] = 0;
  return to_unipoly(normalize_integer(remap_vars(el[0], 1, down)));
}

GcvReport gcv(const Poly<Rat> &f, const AppOptions &opts) {
  if (f.is_constant()) throw DomainError("constant objective");
  GcvReport rep;
  rep.k0_poly = critical_values_poly(f, opts.gb);
  DominantMap map = DominantMap::of({f});
  Randomness rnd = draw_randomness(map.n, 1, opts.seed);
  AcvOptions aopts = opts.acv;
  aopts.gb = opts.gb;
  AcvResult<Rat> res = acv_run(QField{}, map, Variant::acv2, rnd, aopts);
  rep.kinf_poly = to_unipoly(res.generators[0]);
  UniPoly prod = uni_mul(rep.k0_poly, rep.kinf_poly);
  UniPoly s = squarefree_or_one(prod);
  if (uni_degree(s) >= 1) {
    for (const auto &root : real_roots(s)) {
      bool c = vanishes_at(rep.k0_poly, root);
      bool a = vanishes_at(rep.kinf_poly, root);
      rep.union_roots.push_back(root);
      rep.tags.push_back(c && a  ? RootTag::both
                         : c     ? RootTag::critical
                                 : RootTag::asymptotic);
    }
  }
  return rep;
}

std::vector<Rat> choose_test_points(std::vector<AlgebraicNumber> roots) {
  if (roots.empty()) return {Rat(0)};
  // refine until pairwise disjoint so midpoints interleave strictly
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      if (!(roots[i].interval.hi < roots[i + 1].interval.lo)) {
        Rat w = roots[i].interval.width() + roots[i + 1].interval.width();
        Rat target = w == 0 ? Rat(1, 4) : w / 4;
        roots[i] = refine(roots[i], target);
        roots[i + 1] = refine(roots[i + 1], target);
        again = true;
      }
  }
  std::vector<Rat> pts;
  pts.push_back(roots.front().interval.lo - 1);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    pts.push_back((roots[i].interval.hi + roots[i + 1].interval.lo) / 2);
  pts.push_back(roots.back().interval.hi + 1);
  return pts;
}

SampleReport fiber_sample(const Poly<Rat> &f, const Rat &r,
                          const AppOptions &opts) {
  QField q;
  std::size_t n = f.nv;
  Randomness rnd = draw_randomness(n, 1, opts.seed ^ 0xf1be5a3ull);
  std::vector<Poly<Rat>> sys;
  sys.push_back(f - constant_poly(q, n, r));
  // 2×2 minors of [∇f ; z − a]: distance to a is critical on the fiber
  std::vector<Poly<Rat>> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(derivative(f, i));
  std::vector<Poly<Rat>> za;
  for (std::size_t i = 0; i < n; ++i)
    za.push_back(var_poly(q, n, i) - constant_poly(q, n, Rat(rnd.a[i])));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sys.push_back(grad[i] * za[j] - grad[j] * za[i]);
  RealSolutionSet sol = zero_dim_real_solve(sys, opts.seed, opts.gb);
  SampleReport rep;
  rep.e = r;
  rep.empty = sol.empty();
  if (!rep.empty) rep.points = solution_boxes(sol, pow10_inv(10));
  return rep;
}

InfimumVerdict infimum(const Poly<Rat> &f, const AppOptions &opts) {
  GcvReport rep = gcv(f, opts);
  InfimumVerdict v;
  v.test_points = choose_test_points(rep.union_roots);
  std::optional<AlgebraicNumber> least_crit;
  for (std::size_t i = 0; i < rep.union_roots.size(); ++i)
    if (rep.tags[i] != RootTag::asymptotic) {
      least_crit = rep.union_roots[i];
      break;
    }
  std::size_t nonempty_at = v.test_points.size();
  for (std::size_t i = 0; i < v.test_points.size(); ++i) {
    SampleReport s = fiber_sample(f, v.test_points[i], opts);
    v.fiber_nonempty.push_back(!s.empty);
    if (!s.empty) {
      nonempty_at = i;
      break;
    }
  }
  if (nonempty_at == 0) {
    v.kind = InfimumKind::UnboundedBelow;
    return v;
  }
  if (nonempty_at < v.test_points.size()) {
    // fibers below test point nonempty_at are all empty
    if (least_crit &&
        compare(exact_number(v.test_points[nonempty_at]), *least_crit) > 0) {
      v.kind = InfimumKind::MinimumAttained;
      v.value = *least_crit;
    } else {
      v.kind = InfimumKind::InfimumAtInfinity;
      v.value = rep.union_roots[nonempty_at - 1];
    }
    return v;
  }
  // every tested fiber empty
  if (least_crit) {
    v.kind = InfimumKind::MinimumAttained;
    v.value = *least_crit;
    return v;
  }
  if (!rep.union_roots.empty()) {
    v.kind = InfimumKind::InfimumAtInfinity;
    v.value = rep.union_roots.back();
    return v;
  }
  throw PipelineError("no generalized critical values and no nonempty fiber");
}

SampleReport sample_positive(const Poly<Rat> &f, const AppOptions &opts) {
  GcvReport rep = gcv(f, opts);
  // e strictly between 0 and the least positive generalized critical value
  Rat e(1);
  std::optional<std::size_t> least_pos;
  for (std::size_t i = 0; i < rep.union_roots.size(); ++i)
    if (sign_at(rep.union_roots[i]) > 0) {
      least_pos = i;
      break;
    }
  if (least_pos) {
    AlgebraicNumber r = rep.union_roots[*least_pos];
    while (!(r.interval.lo > 0)) r = refine(r, r.interval.width() / 4);
    e = r.interval.lo / 2;
  }
  SampleReport s = fiber_sample(f, e, opts);
  if (!s.empty) return s;
  // the low fiber may be empty while f still attains positive critical
  // values; certify through the real critical points in that case
  bool positive_crit = false;
  if (least_pos)
    for (std::size_t i = *least_pos; i < rep.union_roots.size(); ++i)
      if (rep.tags[i] != RootTag::asymptotic) positive_crit = true;
  if (positive_crit) {
    std::vector<Poly<Rat>> grad;
    for (std::size_t i = 0; i < f.nv; ++i) grad.push_back(derivative(f, i));
    try {
      RealSolutionSet crit = zero_dim_real_solve(grad, opts.seed, opts.gb);
      for (auto &box : solution_boxes(crit, pow10_inv(10))) {
        RatInterval val = eval_box(f, box);
        if (val.lo > 0) {
          s.empty = false;
          s.points.push_back(box);
        }
      }
    } catch (const NotZeroDimensionalError &) {
      // positive-dimensional critical locus: fall through with the fiber
      // verdict; the low-fiber test already covered the generic case
    }
  }
  return s;
}

} // namespace acv
