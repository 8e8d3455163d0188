#pragma once

#include <vector>

#include "tel/cost.hpp"
#include "tel/family.hpp"
#include "tel/grid.hpp"
#include "tel/report.hpp"
#include "tel/semigroup.hpp"
#include "tel/transport.hpp"

namespace tel {

// T_c(nu, mu) <= C H(nu|mu), one report per family measure.
std::vector<InequalityReport> verify_Tc(const GridMeasure& mu, double C, const AlphaCost& alpha,
                                        const TestFamily& family, int count = -1);
InequalityReport verify_Tc_single(const GridMeasure& mu, double C, const AlphaCost& alpha,
                                  const GridMeasure& nu, const std::string& witness);

// Ent_mu(e^f) <= 1/(1 - lambda C) int (f - Q^lambda f) e^f dmu,  lambda in (0, 1/C)
InequalityReport verify_ICLSI(const GridMeasure& mu, double C, double lambda,
                              const GridFunction& f, const AlphaCost& alpha,
                              double tol_override = -1.0);

// Ent_mu(e^f) <= eta/(1 - C(eta+K)) int c*(grad f / eta) e^f dmu
// for K-semi-convex f; the certificate precondition is enforced.
InequalityReport verify_rMLSI(const GridMeasure& mu, double C, const AlphaCost& alpha, double K,
                              double eta, const GridFunction& f, double tol_override = -1.0);

// Ent_mu(e^f) <= 2C/(1-KC)^2 int |grad f|^2 e^f dmu (quadratic cost)
InequalityReport verify_rLSI(const GridMeasure& mu, double C, double K, const GridFunction& f,
                             double tol_override = -1.0);

// int e^f dmu <= exp( int sup_y {f(y) - lambda c(x-y)} dmu )
InequalityReport verify_bobkov_gotze(const GridMeasure& mu, double lambda, const GridFunction& f,
                                     const AlphaCost& alpha, double tol_override = -1.0);

// Ent_mu(e^f) <= 1/(1-lambda C) int (P^lambda f - f) dmu int e^f dmu
InequalityReport verify_LS1(const GridMeasure& mu, double C, double lambda, const GridFunction& f,
                            const AlphaCost& alpha, double tol_override = -1.0);

// Ent_mu(e^f) <= eta/(1-C(eta+K)) int c*(grad f/eta) dmu int e^f dmu,
// f K-semi-concave (defect of -f at most K).
InequalityReport verify_LS2(const GridMeasure& mu, double C, double K, double eta,
                            const GridFunction& f, const AlphaCost& alpha,
                            double tol_override = -1.0);

// Var_mu(f) <= C int |grad f|^2 dmu
InequalityReport verify_poincare(const GridMeasure& mu, double C, const GridFunction& f,
                                 double tol_override = -1.0);

// Ent_mu(e^f) <= C kappa^2 K(kappa, C) int alpha21*(grad f / kappa) e^f dmu
InequalityReport verify_BLI(const GridMeasure& mu, double C, double kappa, const GridFunction& f,
                            double tol_override = -1.0);

// Laplace bound for 1-Lipschitz K-semi-convex f:
// int e^{lambda(f - int f)} dmu <= exp(2 lambda^2 C / (1 - lambda K C))
InequalityReport herbst_check(const GridMeasure& mu, double C, double K, const GridFunction& f,
                              double lambda, double tol_override = -1.0);

// Ent_{mu x mu}(e^f) <= int [Ent_mu(e^{f(.,y)}) + Ent_mu(e^{f(x,.)})] dmu dmu
InequalityReport tensorization_check(const GridMeasure& mu, const ProductFunction& f2,
                                     double tol_override = -1.0);

struct ConcentrationRow {
  double r = 0.0;
  double measure = 0.0;  // mu^n(A + r B_2)
  double bound = 0.0;    // 1 - exp(-(r - r0)^2 / (18 C))
  bool enforced = false;  // bound asserted only for r >= r0
  bool pass = true;
};

struct ConcentrationProfile {
  double r0 = 0.0;
  double set_mass = 0.0;
  std::vector<ConcentrationRow> rows;
  bool pass = true;
};

// A given as flat indices into the product grid (row-major for dim 2).
ConcentrationProfile concentration_profile(const ProductMeasure& mu_n,
                                           const std::vector<char>& indicator,
                                           const std::vector<double>& r_values, double C);

// Tilts mu by phi and checks T_c(8 C e^{Osc(phi)}) on the tilted measure.
// Precondition: verify_Tc(mu, C, family) passes first.
std::vector<InequalityReport> perturbation_check(const GridMeasure& mu, double C,
                                                 const GridFunction& phi, const AlphaCost& alpha,
                                                 const TestFamily& family, int count = -1);

// Lemma: f - Q^{K+eta} f <= eta c*(-grad f / eta) pointwise on the interior.
InequalityReport lemma_easy_check(const GridFunction& f, double K, double eta,
                                  const AlphaCost& alpha, double tol_override = -1.0);

}  // namespace tel
