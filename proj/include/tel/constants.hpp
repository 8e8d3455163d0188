#pragma once

#include <json.hpp>

#include "tel/cost.hpp"
#include "tel/family.hpp"
#include "tel/grid.hpp"
#include "tel/report.hpp"

namespace tel {

// ell(t) = eta ((1-t)^{1-v} - (1-t)), the Hamilton-Jacobi interpolation weight
double ell(double t, double eta, double v);
// T(v) = 1 - (1-v)^{1/v}
double T_of_v(double v);
// ell(T(v)) = eta v (1-v)^{1/v - 1}
double ell_at_T(double eta, double v);

struct SupVResult {
  double v_star = 0.0;
  double g_star = 0.0;  // sup of v (1-v)^{1/v}
};
// maximizes v (1-v)^{1/v} on (0,1) by golden section
SupVResult sup_v_functional();

struct PhiMinResult {
  double t_min = 0.0;
  double phi_min = 0.0;
};
// minimum of phi(t) = lambda t / 2 + 2 lambda^2 C / (1 - lambda C / t) over t > C lambda;
// closed form (3 C lambda, 9 C lambda^2 / 2)
PhiMinResult phi_min(double lambda, double C);
// numerical cross-check of the same minimization
PhiMinResult phi_min_numeric(double lambda, double C);

// K(kappa, C) = ((2 + kappa sqrt(C)) / (2 - kappa sqrt(C)))^2 e^{kappa sqrt(5C)}
double bli_constant(double kappa, double C);

// |Ent_mu(e^{eps f}) / (eps^2/2) - Var_mu(f)| must shrink by at least the
// stated factor across halvings of eps.
InequalityReport poincare_linearization_check(const GridMeasure& mu, const GridFunction& f,
                                              const std::vector<double>& eps_sequence,
                                              double ratio_bound = 0.6);

struct ChainStage {
  int count = 0;
  int passes = 0;
  double worst_slack = kInf;
};

// Implication-chain experiment: T_c sweep, ICLSI sweep, rMLSI sweep (admissible
// combinations only), plus empirical lower-bound constants.
struct ChainReport {
  std::string mu_spec;
  std::string cost_id;
  double C = 0.0;
  uint64_t seed = 0;
  ChainStage tc, iclsi, rmlsi;
  int rmlsi_inadmissible = 0;
  double hatC_tc = 0.0;     // max T_c / H over the family (lower bound)
  double hatC_iclsi = 0.0;  // inf constant making each ICLSI instance pass, maxed
  double hatC_rmlsi = 0.0;
  bool eight_c3_ok = false;  // hatC_tc <= 8 C whenever the rMLSI sweep passes
  bool all_pass = false;

  nlohmann::ordered_json to_json() const;
};

ChainReport run_chain(const GridMeasure& mu, const AlphaCost& alpha, double C, uint64_t seed);

}  // namespace tel
