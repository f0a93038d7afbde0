#pragma once

#include "acv/groebner.hpp"
#include "acv/realalg.hpp"

namespace acv {

/// Shape-position verification failed even after a fresh change of
/// coordinates; the answer is inconclusive, never silently wrong.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotZeroDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Real solutions of a zero-dimensional system after the linear change
/// x = M y: eliminant q(y_n) square-free, lifts y_i = g_i(y_n) for i < n.
struct RealSolutionSet {
  std::size_t n = 0;
  std::vector<std::vector<long>> M;
  UniPoly eliminant;
  std::vector<UniPoly> lifts; // size n−1; the last coordinate is the root
  std::vector<AlgebraicNumber> roots;

  bool empty() const { return roots.empty(); }
};

/// Boxes in the original coordinates, each coordinate of width ≤ width,
/// one per real solution, in eliminant-root order.
std::vector<std::vector<RatInterval>>
solution_boxes(const RealSolutionSet &s, const Rat &width);

/// Random linear change, lex Gröbner basis, structural shape-position
/// check, Descartes isolation of the square-free eliminant, and a residual
/// interval check of every input generator at width 10⁻²⁰. One retry with
/// fresh randomness on shape failure.
RealSolutionSet zero_dim_real_solve(const std::vector<Poly<Rat>> &gens,
                                    std::uint64_t seed,
                                    const GBOptions &opts = {});

} // namespace acv
