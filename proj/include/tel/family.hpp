#pragma once

#include "tel/grid.hpp"
#include "tel/rng.hpp"

namespace tel {

// Seeded generators for test functions and measures. Deterministic under a
// fixed seed: every draw is a pure function of (seed, stream, counter).
//
// Functions are spans of {1, x, x^2, sin(wx), mollified |x-a|} with bounded
// coefficients. Measures are tilts of the base measure scaled to Osc <= 2;
// the first three are near-translate tilts m x + 0.02 x^2, which keep the
// quadratic-cost transport/entropy ratio close to (but strictly below) one.
struct TestFamily {
  uint64_t seed = 0;
  int function_count = 50;
  int measure_count = 100;

  explicit TestFamily(uint64_t s) : seed(s) {}

  // general member: rough curvature allowed
  GridFunction function(const Grid1D& grid, int index) const;

  // 1-Lipschitz member with gentle curvature (for Hopf-Lax / Herbst sweeps)
  GridFunction lipschitz_function(const Grid1D& grid, int index) const;

  // tilted measure family over the given base
  GridMeasure measure(const GridMeasure& base, int index) const;

  // function on a 2-fold product grid with a coupling term
  ProductFunction product_function(const Grid1D& grid, int index) const;
};

}  // namespace tel
