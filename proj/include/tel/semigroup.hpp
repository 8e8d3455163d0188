#pragma once

#include "tel/cost.hpp"
#include "tel/grid.hpp"
#include "tel/report.hpp"

namespace tel {

// Q^lambda f(x) = min over grid y of f(y) + lambda c(x-y). Exact grid minimum;
// the monotone-minimizer sweep is valid because the kernel is convex.
GridFunction inf_convolution(const GridFunction& f, double lambda, const AlphaCost& alpha);

// Hopf-Lax: P_t f(x) = max over grid y of f(y) - t c((x-y)/t).
GridFunction sup_convolution(const GridFunction& f, double t, const AlphaCost& alpha);

// P^lambda f(x) = max over grid y of f(y) - lambda c(x-y)  (Bobkov-Goetze kernel).
GridFunction sup_convolution_kernel(const GridFunction& f, double lambda,
                                    const AlphaCost& alpha);

// max |f(x_{i+1}) - f(x_i)| / h
double lipschitz_constant(const GridFunction& f);

enum class CertificateMode { gradient_form, midpoint_form };

// Minimal certified K with f(y) >= f(x) + f'(x)(y-x) - K c(y-x) over grid pairs
// (gradient form), or the discrete midpoint inequality (midpoint form).
struct SemiConvexityCertificate {
  double K_min = 0.0;
  int witness_x = -1;
  int witness_y = -1;
  CertificateMode mode = CertificateMode::gradient_form;
  bool witness_on_boundary = false;  // truncation artifact flag
};

SemiConvexityCertificate semiconvexity_defect(const GridFunction& f, const AlphaCost& alpha);
// midpoint form restricted to grid-aligned midpoints (lambda = 1/2)
SemiConvexityCertificate midpoint_defect(const GridFunction& f, const AlphaCost& alpha);

// defect(P_u f) <= 4 u omega_alpha(1/(2u)) + tol
InequalityReport check_lem_semiconv(const GridFunction& f, double u, const AlphaCost& alpha);

// max over interior grid of |(P_{t+dt} f - P_t f)/dt - c*(-grad P_t f)|,
// skipping detected kink points (central vs one-sided gradient gap > 10 h).
double hopf_lax_residual(const GridFunction& f, double t, double dt, const AlphaCost& alpha);

}  // namespace tel
