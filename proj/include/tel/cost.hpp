#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "tel/numeric.hpp"

namespace tel {

// Raised when a cost profile fails an admissibility invariant.
struct AdmissibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Admissible 1D cost profile: alpha convex, symmetric, alpha(0) = alpha'(0) = 0,
// alpha' concave on the positive half line. Checked by sampling at construction.
struct AlphaCost {
  std::string name;
  std::function<double(double)> eval;    // alpha
  std::function<double(double)> deriv;   // alpha'
  std::function<double(double)> conj;    // alpha*, may return +inf
  double conj_domain_radius = kInf;      // alpha* = +inf beyond this radius
  bool conj_closed_form = false;
  bool homogeneous_quadratic = false;    // alpha(t) = c t^2: omega is exactly x^2

  double operator()(double t) const { return eval(t); }
};

// Separable multivariate cost c(x) = sum_i alpha(x_i); conjugate is separable too.
struct SeparableCost {
  AlphaCost alpha;
  int dim = 1;

  SeparableCost(AlphaCost a, int k) : alpha(std::move(a)), dim(k) {
    if (dim < 1) throw std::invalid_argument("SeparableCost: dim must be >= 1");
  }
};

AlphaCost make_quadratic();                       // t^2/2, self-dual
AlphaCost make_power_smooth(double p);            // C^1 glue of t^2 and (2/p)(t^p-1)+1, p in [1,2]
AlphaCost make_alpha21();                         // t^2/2 for |t|<=1, |t|-1/2 beyond
AlphaCost make_scaled(const AlphaCost& base, double u);  // c_u(t) = u c(t/u), u >= 1
// Admissibility-checked profile with numerical conjugate.
AlphaCost make_custom(const std::string& name, std::function<double(double)> eval,
                      std::function<double(double)> deriv);

// Parses "quadratic" | "power:<p>" | "alpha21" | "scaled:<base>:<u>".
AlphaCost make_builtin(const std::string& id);

// alpha*(h) = sup_y { h y - alpha(y) }; closed form when registered, otherwise a
// radius-doubling bracket plus golden section (the objective is concave).
double legendre_conjugate(const AlphaCost& alpha, double h);

// Numerical sup of h*y - f(y); +inf when still rising at the radius cap.
double legendre_numeric(const std::function<double(double)>& f, double h,
                        double radius_cap = 1e9);

// omega_alpha(x) = sup_{u>0} alpha(u x)/alpha(u), log-spaced u grid.
// Computed value is a lower bound of the true sup.
double omega_alpha(const AlphaCost& alpha, double x, int grid_points = 2001);
double omega_ratio_sup(const std::function<double(double)>& alpha_eval, double x,
                       int grid_points = 2001);

// alpha(u) + v alpha'(u) + 4 alpha(v/2) - alpha(u+v); nonnegative for admissible alpha.
double lemma51_gap(const AlphaCost& alpha, double u, double v);

}  // namespace tel
