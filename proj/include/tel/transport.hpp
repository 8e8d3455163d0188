#pragma once

#include <vector>

#include "tel/cost.hpp"
#include "tel/grid.hpp"

namespace tel {

struct PlanEntry {
  int row = 0;  // index into nu support
  int col = 0;  // index into mu support
  double mass = 0.0;
};

enum class TransportMethod { monotone, lp };

struct TransportResult {
  double cost = 0.0;
  TransportMethod method = TransportMethod::monotone;
  std::vector<PlanEntry> plan;
};

// Joint weight matrix with prescribed marginals.
struct Coupling {
  GridMeasure row_measure;  // nu
  GridMeasure col_measure;  // mu
  std::vector<double> plan;  // row-major, row_measure.grid.n x col_measure.grid.n

  // marginal sums must match the measures within tol
  void validate(double tol = 1e-10) const;
};

Coupling materialize(const TransportResult& r, const GridMeasure& nu, const GridMeasure& mu);

// Quantile (north-west-corner) coupling on sorted supports; optimal for convex
// alpha of the difference. Ties advance the nu pointer first.
TransportResult transport_1d_monotone(const std::vector<double>& nu_points,
                                      const std::vector<double>& nu_weights,
                                      const std::vector<double>& mu_points,
                                      const std::vector<double>& mu_weights,
                                      const AlphaCost& alpha);
TransportResult transport_1d_monotone(const GridMeasure& nu, const GridMeasure& mu,
                                      const AlphaCost& alpha);

// Exact optimum of the transportation LP (min-cost flow, successive shortest
// paths). Supports capped at 64 points each.
TransportResult transport_lp(const std::vector<double>& nu_weights,
                             const std::vector<double>& mu_weights,
                             const std::vector<double>& cost_matrix /* n x m row-major */);

// Dispatch: k=1 monotone, k=2 LP over the product support.
TransportResult transport_cost(const GridMeasure& nu, const GridMeasure& mu,
                               const SeparableCost& cost);
TransportResult transport_cost(const ProductMeasure& nu, const ProductMeasure& mu,
                               const SeparableCost& cost);

}  // namespace tel
