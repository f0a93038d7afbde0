#pragma once

#include <cstdint>
#include <string>

#include "acv/groebner.hpp"
#include "acv/matrix.hpp"

namespace acv {

/// A pipeline stage produced an output that contradicts the algorithm's
/// guarantees (e.g. every candidate generator vanished); retried once with
/// fresh randomness before surfacing.
struct PipelineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Variant { acv1, acv2, kos };

std::string variant_name(Variant v);

/// Polynomial map K^n → K^p, components in the z-variables only.
struct DominantMap {
  std::vector<Poly<Rat>> f;
  std::size_t n = 0, p = 0;
  std::uint32_t d = 0; // max total degree of a component

  static DominantMap of(std::vector<Poly<Rat>> comps);
};

/// All random choices of one run, reproducible from the seed.
struct Randomness {
  std::uint64_t seed = 0;
  long bound = 99;
  std::vector<std::vector<long>> A; // n×n integer, det ≠ 0
  std::vector<std::vector<long>> r; // p rows of n−p+1 nonzero integers
  std::vector<long> a;              // generic point for the fiber solver
};

/// True iff some p×p minor of jac(f) is a nonzero polynomial.
bool check_dominant(const DominantMap &f);

Randomness draw_randomness(std::size_t n, std::size_t p, std::uint64_t seed,
                           long bound = 99);

/// p^{n−p+1} (d−1)^{n−p} (d+1)^p
Int degree_bound(std::size_t n, std::size_t p, std::uint32_t d);

/// min_j ‖w_j(x)‖² where w_j restricts d f_j to ker jac(f^{[j]})(x);
/// indices j with vanishing kernel-basis denominator are skipped.
Rat kuo_distance_sq(const DominantMap &f, const std::vector<Rat> &x);

/// Benchmark families: "f", "g", "m" (d unused) and "dense" (degree d,
/// full support, coefficients in [−99, 99] from seed).
DominantMap make_family(const std::string &name, std::size_t n,
                        std::uint32_t d = 0, std::uint64_t seed = 0);

/// Variable layout of a per-j system: z₁..z_n, then c₁..c_p, then the
/// variant's extras (e for acv1, u₁..u_{n−p+1} for kos, none for acv2).
template <class K> struct AcvSystem {
  std::size_t j = 0;
  Variant variant = Variant::acv2;
  std::size_t nz = 0, nc = 0, nextra = 0;
  std::vector<Poly<K>> G;
  Poly<K> delta_cleared; // z₁ · numer(δ ∘ τ₁)

  std::size_t nvars() const { return nz + nc + nextra; }
};

template <class K> struct AcvResult {
  Variant variant = Variant::acv2;
  Randomness randomness;
  std::vector<Poly<K>> generators;        // in the p c-variables
  std::vector<std::vector<Poly<K>>> per_j; // intermediate V_j bases
  std::vector<std::uint32_t> primes;       // moduli of a modular run
};

enum class SatStrategy { automatic, rabinowitsch, bayer };

struct AcvOptions {
  GBOptions gb;
  SatStrategy saturation = SatStrategy::automatic;
  int max_redraws = 1; // genericity failures are measure-zero; one retry
};

template <class F>
AcvSystem<typename F::Elem> build_system(const F &field, const DominantMap &f,
                                         std::size_t j, const Randomness &rnd,
                                         Variant variant);

template <class F>
AcvResult<typename F::Elem> acv_run(const F &field, const DominantMap &f,
                                    Variant variant, const Randomness &rnd,
                                    const AcvOptions &opts = {});

struct ModularOptions {
  std::size_t primes = 2;  // primes combined before reconstruction
  bool verify = true;      // recheck against one extra prime
  std::size_t max_primes = 16;
  AcvOptions acv;
};

/// Runs the pipeline modulo word primes, combines by CRT and reconstructs
/// rational coefficients, optionally verifying against an extra prime.
AcvResult<Rat> acv_run_modular(const DominantMap &f, Variant variant,
                               const Randomness &rnd,
                               const ModularOptions &opts = {});

} // namespace acv
