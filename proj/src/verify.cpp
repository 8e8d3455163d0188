#include "tel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "tel/parallel.hpp"

namespace tel {

namespace {

std::string fmt_witness(const char* fmt, ...) {
  char buf[160];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  return buf;
}

double pick_tol(double override_tol, const GridFunction& f) {
  return override_tol >= 0.0 ? override_tol : default_tol(f);
}

// first-order budget for enforcing certificate preconditions
double pre_tol(const GridFunction& f) {
  return 2.0 * (1.0 + lipschitz_constant(f)) * f.grid.spacing();
}

// Shifted exponential sums: with M = max f, returns
//   s  = sum w e^{f-M}
//   ent_shifted = sum w (f-M) e^{f-M} - s log s          (Ent_mu(e^f) = e^M * ent_shifted)
struct ExpSums {
  double shift = 0.0;
  double mass = 0.0;          // sum w e^{f-M}
  double ent_shifted = 0.0;   // Ent in shifted units
};

ExpSums exp_sums(const GridMeasure& mu, const GridFunction& f) {
  ExpSums es;
  es.shift = *std::max_element(f.values.begin(), f.values.end());
  double t = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) {
    double e = std::exp(f.values[i] - es.shift);
    es.mass += mu.weights[i] * e;
    t += mu.weights[i] * (f.values[i] - es.shift) * e;
  }
  es.ent_shifted = t - es.mass * std::log(es.mass);
  return es;
}

void attach_diag(InequalityReport& r, const GridMeasure& relevant) {
  r.boundary_mass = boundary_mass(relevant);
  r.grid_spec = relevant.grid.spec();
}

}  // namespace

InequalityReport verify_Tc_single(const GridMeasure& mu, double C, const AlphaCost& alpha,
                                  const GridMeasure& nu, const std::string& witness) {
  double lhs = transport_1d_monotone(nu, mu, alpha).cost;
  double H = relative_entropy(nu, mu);
  double rhs = C == kInf ? kInf : C * H;
  double tol = 1e-6 * (1.0 + std::fabs(lhs));
  InequalityReport r = make_report("tc", C, lhs, rhs, tol, witness);
  attach_diag(r, nu);
  return r;
}

std::vector<InequalityReport> verify_Tc(const GridMeasure& mu, double C, const AlphaCost& alpha,
                                        const TestFamily& family, int count) {
  if (!(C > 0.0)) throw std::invalid_argument("verify_Tc: C must be positive");
  int n = count > 0 ? count : family.measure_count;
  std::vector<InequalityReport> out(n);
  parallel_for(n, [&](int i) {
    GridMeasure nu = family.measure(mu, i);
    out[i] = verify_Tc_single(mu, C, alpha, nu, fmt_witness("measure[%d]", i));
  });
  return out;
}

InequalityReport verify_ICLSI(const GridMeasure& mu, double C, double lambda,
                              const GridFunction& f, const AlphaCost& alpha,
                              double tol_override) {
  if (!(lambda > 0.0 && lambda < 1.0 / C))
    throw std::invalid_argument("verify_ICLSI: need lambda in (0, 1/C)");
  if (f.grid != mu.grid) throw std::invalid_argument("verify_ICLSI: grid mismatch");
  GridFunction q = inf_convolution(f, lambda, alpha);
  ExpSums es = exp_sums(mu, f);
  double integ = 0.0;  // sum w (f - Qf) e^{f-M}
  for (int i = 0; i < mu.grid.n; ++i)
    integ += mu.weights[i] * (f.values[i] - q.values[i]) * std::exp(f.values[i] - es.shift);
  double scale = std::exp(es.shift);
  double lhs = scale * es.ent_shifted;
  double rhs = scale * integ / (1.0 - lambda * C);
  InequalityReport r = make_report("iclsi", C, lhs, rhs, pick_tol(tol_override, f),
                                   fmt_witness("lambda=%g", lambda));
  attach_diag(r, tilt(mu, f));
  return r;
}

InequalityReport verify_rMLSI(const GridMeasure& mu, double C, const AlphaCost& alpha, double K,
                              double eta, const GridFunction& f, double tol_override) {
  if (!(K >= 0.0 && eta > 0.0 && eta + K < 1.0 / C))
    throw std::invalid_argument("verify_rMLSI: need K >= 0, eta > 0, eta + K < 1/C");
  if (f.grid != mu.grid) throw std::invalid_argument("verify_rMLSI: grid mismatch");
  double tol = pick_tol(tol_override, f);
  SemiConvexityCertificate cert = semiconvexity_defect(f, alpha);
  if (cert.K_min > K + pre_tol(f))
    throw std::invalid_argument(
        fmt_witness("verify_rMLSI: precondition failed, certified defect %.6g > K=%.6g",
                    cert.K_min, K));
  GridFunction g = gradient(f);
  ExpSums es = exp_sums(mu, f);
  double integ = 0.0;
  bool infinite = false;
  for (int i = 0; i < mu.grid.n; ++i) {
    double cstar = legendre_conjugate(alpha, g.values[i] / eta);
    if (!std::isfinite(cstar)) {
      if (mu.weights[i] > 0.0) infinite = true;
      continue;
    }
    integ += mu.weights[i] * cstar * std::exp(f.values[i] - es.shift);
  }
  double scale = std::exp(es.shift);
  double lhs = scale * es.ent_shifted;
  double rhs = infinite ? kInf : scale * integ * eta / (1.0 - C * (eta + K));
  InequalityReport r =
      make_report("rmlsi", C, lhs, rhs, tol, fmt_witness("K=%g eta=%g", K, eta));
  attach_diag(r, tilt(mu, f));
  return r;
}

InequalityReport verify_rLSI(const GridMeasure& mu, double C, double K, const GridFunction& f,
                             double tol_override) {
  if (!(K >= 0.0 && K < 1.0 / C))
    throw std::invalid_argument("verify_rLSI: need 0 <= K < 1/C");
  if (f.grid != mu.grid) throw std::invalid_argument("verify_rLSI: grid mismatch");
  double tol = pick_tol(tol_override, f);
  AlphaCost quad = make_quadratic();
  SemiConvexityCertificate cert = semiconvexity_defect(f, quad);
  if (cert.K_min > K + pre_tol(f))
    throw std::invalid_argument(
        fmt_witness("verify_rLSI: precondition failed, certified defect %.6g > K=%.6g",
                    cert.K_min, K));
  GridFunction g = gradient(f);
  ExpSums es = exp_sums(mu, f);
  double integ = 0.0;
  for (int i = 0; i < mu.grid.n; ++i)
    integ += mu.weights[i] * g.values[i] * g.values[i] * std::exp(f.values[i] - es.shift);
  double scale = std::exp(es.shift);
  double pref = 2.0 * C / ((1.0 - K * C) * (1.0 - K * C));
  InequalityReport r = make_report("rlsi", C, scale * es.ent_shifted, scale * pref * integ, tol,
                                   fmt_witness("K=%g", K));
  attach_diag(r, tilt(mu, f));
  return r;
}

InequalityReport verify_bobkov_gotze(const GridMeasure& mu, double lambda, const GridFunction& f,
                                     const AlphaCost& alpha, double tol_override) {
  if (!(lambda > 0.0)) throw std::invalid_argument("verify_bobkov_gotze: lambda must be positive");
  if (f.grid != mu.grid) throw std::invalid_argument("verify_bobkov_gotze: grid mismatch");
  GridFunction pf = sup_convolution_kernel(f, lambda, alpha);
  ExpSums es = exp_sums(mu, f);
  double lhs = std::exp(es.shift) * es.mass;  // int e^f dmu
  double rhs = std::exp(integral(mu, pf));
  InequalityReport r = make_report("bobkov-gotze", lambda, lhs, rhs,
                                   pick_tol(tol_override, f), fmt_witness("lambda=%g", lambda));
  attach_diag(r, mu);
  return r;
}

InequalityReport verify_LS1(const GridMeasure& mu, double C, double lambda, const GridFunction& f,
                            const AlphaCost& alpha, double tol_override) {
  if (!(lambda > 0.0 && lambda < 1.0 / C))
    throw std::invalid_argument("verify_LS1: need lambda in (0, 1/C)");
  if (f.grid != mu.grid) throw std::invalid_argument("verify_LS1: grid mismatch");
  GridFunction pf = sup_convolution_kernel(f, lambda, alpha);
  ExpSums es = exp_sums(mu, f);
  double gap = 0.0;  // int (P^lambda f - f) dmu
  for (int i = 0; i < mu.grid.n; ++i)
    gap += mu.weights[i] * (pf.values[i] - f.values[i]);
  double scale = std::exp(es.shift);
  double lhs = scale * es.ent_shifted;
  double rhs = scale * es.mass * gap / (1.0 - lambda * C);
  InequalityReport r = make_report("ls1", C, lhs, rhs, pick_tol(tol_override, f),
                                   fmt_witness("lambda=%g", lambda));
  attach_diag(r, mu);
  return r;
}

InequalityReport verify_LS2(const GridMeasure& mu, double C, double K, double eta,
                            const GridFunction& f, const AlphaCost& alpha, double tol_override) {
  if (!(K >= 0.0 && eta > 0.0 && eta + K < 1.0 / C))
    throw std::invalid_argument("verify_LS2: need K >= 0, eta > 0, eta + K < 1/C");
  if (f.grid != mu.grid) throw std::invalid_argument("verify_LS2: grid mismatch");
  double tol = pick_tol(tol_override, f);
  GridFunction neg(f.grid, f.values);
  for (double& v : neg.values) v = -v;
  SemiConvexityCertificate cert = semiconvexity_defect(neg, alpha);
  if (cert.K_min > K + pre_tol(f))
    throw std::invalid_argument(
        fmt_witness("verify_LS2: precondition failed, f not %.6g-semi-concave (defect %.6g)", K,
                    cert.K_min));
  GridFunction g = gradient(f);
  ExpSums es = exp_sums(mu, f);
  double integ = 0.0;
  bool infinite = false;
  for (int i = 0; i < mu.grid.n; ++i) {
    double cstar = legendre_conjugate(alpha, g.values[i] / eta);
    if (!std::isfinite(cstar)) {
      if (mu.weights[i] > 0.0) infinite = true;
      continue;
    }
    integ += mu.weights[i] * cstar;
  }
  double scale = std::exp(es.shift);
  double lhs = scale * es.ent_shifted;
  double rhs = infinite ? kInf : scale * es.mass * integ * eta / (1.0 - C * (eta + K));
  InequalityReport r = make_report("ls2", C, lhs, rhs, tol, fmt_witness("K=%g eta=%g", K, eta));
  attach_diag(r, mu);
  return r;
}

InequalityReport verify_poincare(const GridMeasure& mu, double C, const GridFunction& f,
                                 double tol_override) {
  if (!(C > 0.0)) throw std::invalid_argument("verify_poincare: C must be positive");
  GridFunction g = gradient(f);
  double lhs = variance(mu, f);
  double rhs = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) rhs += mu.weights[i] * g.values[i] * g.values[i];
  rhs *= C;
  InequalityReport r = make_report("poincare", C, lhs, rhs, pick_tol(tol_override, f), "");
  attach_diag(r, mu);
  return r;
}

InequalityReport verify_BLI(const GridMeasure& mu, double C, double kappa, const GridFunction& f,
                            double tol_override) {
  if (!(kappa > 0.0 && kappa < 2.0 / std::sqrt(C)))
    throw std::invalid_argument("verify_BLI: need 0 < kappa < 2/sqrt(C)");
  double sc = kappa * std::sqrt(C);
  double kkc = std::pow((2.0 + sc) / (2.0 - sc), 2.0) * std::exp(kappa * std::sqrt(5.0 * C));
  GridFunction g = gradient(f);
  ExpSums es = exp_sums(mu, f);
  double integ = 0.0;
  bool infinite = false;
  for (int i = 0; i < mu.grid.n; ++i) {
    double v = g.values[i] / kappa;
    if (std::fabs(v) > 1.0) {  // alpha21* = +inf outside [-1, 1]
      if (mu.weights[i] > 0.0) infinite = true;
      continue;
    }
    integ += mu.weights[i] * 0.5 * v * v * std::exp(f.values[i] - es.shift);
  }
  double scale = std::exp(es.shift);
  double lhs = scale * es.ent_shifted;
  double rhs = infinite ? kInf : scale * C * kappa * kappa * kkc * integ;
  InequalityReport r =
      make_report("bli", C, lhs, rhs, pick_tol(tol_override, f), fmt_witness("kappa=%g", kappa));
  attach_diag(r, tilt(mu, f));
  return r;
}

InequalityReport herbst_check(const GridMeasure& mu, double C, double K, const GridFunction& f,
                              double lambda, double tol_override) {
  if (!(lambda > 0.0)) throw std::invalid_argument("herbst_check: lambda must be positive");
  if (K > 0.0 && !(lambda < 1.0 / (C * K)))
    throw std::invalid_argument("herbst_check: need lambda < 1/(C K)");
  double tol = pick_tol(tol_override, f);
  double lip = lipschitz_constant(f);
  if (lip > 1.0 + 1e-9 + 2.0 * f.grid.spacing())
    throw std::invalid_argument(
        fmt_witness("herbst_check: f is not 1-Lipschitz (constant %.6g)", lip));
  AlphaCost quad = make_quadratic();
  SemiConvexityCertificate cert = semiconvexity_defect(f, quad);
  if (cert.K_min > K + pre_tol(f))
    throw std::invalid_argument(
        fmt_witness("herbst_check: precondition failed, certified defect %.6g > K=%.6g",
                    cert.K_min, K));
  double lhs = laplace_transform(mu, f, lambda);
  double rhs = std::exp(2.0 * lambda * lambda * C / (1.0 - lambda * K * C));
  InequalityReport r = make_report("herbst", C, lhs, rhs, tol,
                                   fmt_witness("lambda=%g K=%g", lambda, K));
  attach_diag(r, mu);
  return r;
}

InequalityReport tensorization_check(const GridMeasure& mu, const ProductFunction& f2,
                                     double tol_override) {
  if (f2.gx != mu.grid || f2.gy != mu.grid)
    throw std::invalid_argument("tensorization_check: product grid must match mu's grid");
  const int n = mu.grid.n;
  if (n > 101) throw std::invalid_argument("tensorization_check: product grid capped at 101x101");
  double shift = *std::max_element(f2.values.begin(), f2.values.end());
  // Ent over the product measure, shifted
  double mass = 0.0, t = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double w = mu.weights[i] * mu.weights[j];
      double v = f2.at(i, j) - shift;
      double e = std::exp(v);
      mass += w * e;
      t += w * v * e;
    }
  double lhs = std::exp(shift) * (t - mass * std::log(mass));
  // sum of conditional one-coordinate entropies averaged over the product
  double rhs = 0.0;
  std::vector<double> slice(n);
  for (int j = 0; j < n; ++j) {  // Ent in x at fixed y_j
    for (int i = 0; i < n; ++i) slice[i] = f2.at(i, j) - shift;
    double s = 0.0, tt = 0.0;
    for (int i = 0; i < n; ++i) {
      double e = std::exp(slice[i]);
      s += mu.weights[i] * e;
      tt += mu.weights[i] * slice[i] * e;
    }
    rhs += mu.weights[j] * (tt - s * std::log(s));
  }
  for (int i = 0; i < n; ++i) {  // Ent in y at fixed x_i
    for (int j = 0; j < n; ++j) slice[j] = f2.at(i, j) - shift;
    double s = 0.0, tt = 0.0;
    for (int j = 0; j < n; ++j) {
      double e = std::exp(slice[j]);
      s += mu.weights[j] * e;
      tt += mu.weights[j] * slice[j] * e;
    }
    rhs += mu.weights[i] * (tt - s * std::log(s));
  }
  rhs *= std::exp(shift);
  double tol = tol_override >= 0.0 ? tol_override : 1e-9 * (1.0 + std::fabs(lhs));
  InequalityReport r = make_report("tensorization", 1.0, lhs, rhs, tol, "");
  attach_diag(r, mu);
  return r;
}

ConcentrationProfile concentration_profile(const ProductMeasure& mu_n,
                                           const std::vector<char>& indicator,
                                           const std::vector<double>& r_values, double C) {
  if (!(C > 0.0)) throw std::invalid_argument("concentration_profile: C must be positive");
  const int dim = mu_n.dim();
  const auto& m0 = mu_n.factors[0];
  const int n0 = m0.grid.n;
  const int n1 = dim == 2 ? mu_n.factors[1].grid.n : 1;
  const size_t total = static_cast<size_t>(n0) * n1;
  if (indicator.size() != total)
    throw std::invalid_argument("concentration_profile: indicator size mismatch");

  std::vector<double> w(total), px(total), py(total);
  std::vector<size_t> set_points;
  double set_mass = 0.0;
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      size_t k = static_cast<size_t>(i) * n1 + j;
      w[k] = m0.weights[i] * (dim == 2 ? mu_n.factors[1].weights[j] : 1.0);
      px[k] = m0.grid.point(i);
      py[k] = dim == 2 ? mu_n.factors[1].grid.point(j) : 0.0;
      if (indicator[k]) {
        set_points.push_back(k);
        set_mass += w[k];
      }
    }
  if (set_mass < 0.5 - 1e-12)
    throw std::invalid_argument("concentration_profile: need mu^n(A) >= 1/2");

  // Euclidean distance to the grid set A
  std::vector<double> dist(total);
  parallel_for(static_cast<int>(total), [&](int k) {
    if (indicator[k]) {
      dist[k] = 0.0;
      return;
    }
    double best = kInf;
    for (size_t a : set_points) {
      double dx = px[k] - px[a], dy = py[k] - py[a];
      best = std::min(best, dx * dx + dy * dy);
    }
    dist[k] = std::sqrt(best);
  });

  ConcentrationProfile prof;
  prof.set_mass = set_mass;
  prof.r0 = std::sqrt(18.0 * C * std::log(2.0)) + 1e-9;
  for (double r : r_values) {
    ConcentrationRow row;
    row.r = r;
    for (size_t k = 0; k < total; ++k)
      if (dist[k] <= r + 1e-12) row.measure += w[k];
    row.enforced = r >= prof.r0;
    if (row.enforced) {
      double d = r - prof.r0;
      row.bound = 1.0 - std::exp(-d * d / (18.0 * C));
      row.pass = row.measure >= row.bound - 1e-12;
    }
    prof.rows.push_back(row);
    prof.pass = prof.pass && row.pass;
  }
  return prof;
}

std::vector<InequalityReport> perturbation_check(const GridMeasure& mu, double C,
                                                 const GridFunction& phi, const AlphaCost& alpha,
                                                 const TestFamily& family, int count) {
  auto base = verify_Tc(mu, C, alpha, family, count);
  if (!all_pass(base))
    throw std::invalid_argument("perturbation_check: base measure fails T_c(C) on the family");
  GridMeasure tilde = tilt(mu, phi);
  double constant = 8.0 * C * std::exp(osc(phi));
  int n = count > 0 ? count : family.measure_count;
  std::vector<InequalityReport> out(n);
  parallel_for(n, [&](int i) {
    GridMeasure nu = family.measure(tilde, i);
    out[i] = verify_Tc_single(tilde, constant, alpha, nu, fmt_witness("measure[%d]", i));
    out[i].name = "tc-perturbed";
  });
  return out;
}

InequalityReport lemma_easy_check(const GridFunction& f, double K, double eta,
                                  const AlphaCost& alpha, double tol_override) {
  if (!(eta > 0.0)) throw std::invalid_argument("lemma_easy_check: eta must be positive");
  if (!(K >= 0.0)) throw std::invalid_argument("lemma_easy_check: K must be nonnegative");
  GridFunction q = inf_convolution(f, K + eta, alpha);
  GridFunction g = gradient(f);
  double worst_slack = kInf;
  double at_lhs = 0.0, at_rhs = 0.0;
  int at = -1;
  for (int i = 1; i + 1 < f.grid.n; ++i) {
    double lhs = f.values[i] - q.values[i];
    double rhs = eta * legendre_conjugate(alpha, -g.values[i] / eta);
    if (!std::isfinite(rhs)) continue;  // bound trivially true there
    if (rhs - lhs < worst_slack) {
      worst_slack = rhs - lhs;
      at_lhs = lhs;
      at_rhs = rhs;
      at = i;
    }
  }
  double tol = pick_tol(tol_override, f);
  InequalityReport r = make_report("lemma-easy", K + eta, at_lhs, at_rhs, tol,
                                   fmt_witness("K=%g eta=%g worst_at=%d", K, eta, at));
  r.grid_spec = f.grid.spec();
  return r;
}

}  // namespace tel
