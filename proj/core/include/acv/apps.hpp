#pragma once

#include <optional>

#include "acv/acv.hpp"
#include "acv/solver.hpp"

namespace acv {

enum class RootTag { critical, asymptotic, both };

/// Algebraic representation of the generalized critical values of a
/// polynomial function: classical critical values and the ACV superset.
struct GcvReport {
  UniPoly k0_poly;
  UniPoly kinf_poly;
  std::vector<AlgebraicNumber> union_roots; // ascending
  std::vector<RootTag> tags;                // parallel to union_roots
};

struct SampleReport {
  bool empty = true;
  Rat e;
  // refined boxes, coordinate width ≤ 10⁻¹⁰, one per sample point
  std::vector<std::vector<RatInterval>> points;
};

enum class InfimumKind { MinimumAttained, InfimumAtInfinity, UnboundedBelow };

struct InfimumVerdict {
  InfimumKind kind = InfimumKind::UnboundedBelow;
  std::optional<AlgebraicNumber> value;
  std::vector<Rat> test_points;
  std::vector<bool> fiber_nonempty; // parallel to the tested prefix
};

struct AppOptions {
  std::uint64_t seed = 0;
  GBOptions gb;
  AcvOptions acv;
};

/// Generator of ⟨f − c, ∂f/∂z₁, …, ∂f/∂zₙ⟩ ∩ K[c], integer-normalized.
UniPoly critical_values_poly(const Poly<Rat> &f, const GBOptions &opts = {});

GcvReport gcv(const Poly<Rat> &f, const AppOptions &opts = {});

/// Emptiness and sample points of V(f − r) ∩ Rⁿ by distance-critical
/// points to a random generic point; r must avoid the generalized
/// critical values.
SampleReport fiber_sample(const Poly<Rat> &f, const Rat &r,
                          const AppOptions &opts = {});

/// r₀ < c₁ < r₁ < … < c_k < r_k strictly interleaving the given roots;
/// a single 0 when there are none.
std::vector<Rat> choose_test_points(std::vector<AlgebraicNumber> roots);

InfimumVerdict infimum(const Poly<Rat> &f, const AppOptions &opts = {});

/// Emptiness and sample points of {f > 0}: tests the fiber at a rational
/// level below the least positive generalized critical value.
SampleReport sample_positive(const Poly<Rat> &f, const AppOptions &opts = {});

} // namespace acv
