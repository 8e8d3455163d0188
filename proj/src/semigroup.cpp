#include "tel/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "tel/parallel.hpp"

namespace tel {

namespace {

// Divide-and-conquer row minimization of M[i][j] = f(y_j) + kernel((i-j)h).
// The kernel is convex, so the matrix is Monge and leftmost argmins are
// nondecreasing in i. kernel_table[k + n - 1] = kernel(k h), k in [-(n-1), n-1].
void dc_min(const std::vector<double>& fy, const std::vector<double>& kernel_table, int n,
            int ilo, int ihi, int jlo, int jhi, std::vector<double>& out) {
  if (ilo > ihi) return;
  int mid = (ilo + ihi) / 2;
  int best_j = jlo;
  double best = kInf;
  for (int j = jlo; j <= jhi; ++j) {
    double v = fy[j] + kernel_table[mid - j + n - 1];
    if (v < best) {
      best = v;
      best_j = j;
    }
  }
  out[mid] = best;
  dc_min(fy, kernel_table, n, ilo, mid - 1, jlo, best_j, out);
  dc_min(fy, kernel_table, n, mid + 1, ihi, best_j, jhi, out);
}

GridFunction grid_inf_kernel(const GridFunction& f, const std::function<double(double)>& kernel) {
  const int n = f.grid.n;
  const double h = f.grid.spacing();
  std::vector<double> table(2 * n - 1);
  for (int k = -(n - 1); k <= n - 1; ++k) table[k + n - 1] = kernel(k * h);
  std::vector<double> out(n);
  dc_min(f.values, table, n, 0, n - 1, 0, n - 1, out);
  return GridFunction(f.grid, std::move(out));
}

}  // namespace

GridFunction inf_convolution(const GridFunction& f, double lambda, const AlphaCost& alpha) {
  if (!(lambda > 0.0)) throw std::invalid_argument("inf_convolution: lambda must be positive");
  return grid_inf_kernel(f, [&](double d) { return lambda * alpha.eval(d); });
}

GridFunction sup_convolution(const GridFunction& f, double t, const AlphaCost& alpha) {
  if (!(t > 0.0)) throw std::invalid_argument("sup_convolution: t must be positive");
  GridFunction neg(f.grid, f.values);
  for (double& v : neg.values) v = -v;
  GridFunction q = grid_inf_kernel(neg, [&](double d) { return t * alpha.eval(d / t); });
  for (double& v : q.values) v = -v;
  return q;
}

GridFunction sup_convolution_kernel(const GridFunction& f, double lambda,
                                    const AlphaCost& alpha) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("sup_convolution_kernel: lambda must be positive");
  GridFunction neg(f.grid, f.values);
  for (double& v : neg.values) v = -v;
  GridFunction q = grid_inf_kernel(neg, [&](double d) { return lambda * alpha.eval(d); });
  for (double& v : q.values) v = -v;
  return q;
}

double lipschitz_constant(const GridFunction& f) {
  double h = f.grid.spacing();
  double lip = 0.0;
  for (int i = 0; i + 1 < f.grid.n; ++i)
    lip = std::max(lip, std::fabs(f.values[i + 1] - f.values[i]) / h);
  return lip;
}

SemiConvexityCertificate semiconvexity_defect(const GridFunction& f, const AlphaCost& alpha) {
  const int n = f.grid.n;
  const double h = f.grid.spacing();
  GridFunction g = gradient(f);
  std::vector<double> cost_table(n);  // cost of displacement k h, k >= 1
  for (int k = 1; k < n; ++k) cost_table[k] = alpha.eval(k * h);

  struct RowBest {
    double val = -kInf;
    int i = -1, j = -1;
  };
  std::vector<RowBest> rows(n);
  parallel_for(n, [&](int i) {
    RowBest rb;
    const double fi = f.values[i], gi = g.values[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double c = cost_table[std::abs(j - i)];
      if (!(c > 0.0)) continue;
      double num = fi + gi * (j - i) * h - f.values[j];
      double k = num / c;
      if (k > rb.val) {
        rb.val = k;
        rb.i = i;
        rb.j = j;
      }
    }
    rows[i] = rb;
  });
  SemiConvexityCertificate cert;
  cert.mode = CertificateMode::gradient_form;
  RowBest best;
  for (int i = 0; i < n; ++i)
    if (rows[i].val > best.val) best = rows[i];  // lowest row index wins ties
  cert.K_min = std::max(0.0, best.val);
  cert.witness_x = best.i;
  cert.witness_y = best.j;
  cert.witness_on_boundary =
      best.i == 0 || best.i == n - 1 || best.j == 0 || best.j == n - 1;
  return cert;
}

SemiConvexityCertificate midpoint_defect(const GridFunction& f, const AlphaCost& alpha) {
  const int n = f.grid.n;
  const double h = f.grid.spacing();
  std::vector<double> cost_table(n);
  for (int k = 1; k < n; ++k) cost_table[k] = alpha.eval(0.5 * k * h);

  SemiConvexityCertificate cert;
  cert.mode = CertificateMode::midpoint_form;
  double best = -kInf;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; j += 2) {
      int m = (i + j) / 2;
      double c = cost_table[j - i];
      if (!(c > 0.0)) continue;
      double num = f.values[m] - 0.5 * (f.values[i] + f.values[j]);
      double k = num / c;
      if (k > best) {
        best = k;
        cert.witness_x = i;
        cert.witness_y = j;
      }
    }
  }
  cert.K_min = std::max(0.0, best);
  cert.witness_on_boundary = cert.witness_x == 0 || cert.witness_y == n - 1;
  return cert;
}

InequalityReport check_lem_semiconv(const GridFunction& f, double u, const AlphaCost& alpha) {
  if (!(u > 0.0)) throw std::invalid_argument("check_lem_semiconv: u must be positive");
  GridFunction pu = sup_convolution(f, u, alpha);
  SemiConvexityCertificate cert = semiconvexity_defect(pu, alpha);
  double bound = 4.0 * u * omega_alpha(alpha, 1.0 / (2.0 * u));
  double tol = 2.0 * (1.0 + lipschitz_constant(pu)) * f.grid.spacing();
  char wit[96];
  std::snprintf(wit, sizeof(wit), "u=%g witness=(%d,%d)", u, cert.witness_x, cert.witness_y);
  InequalityReport r = make_report("semigroup-semiconvexity", u, cert.K_min, bound, tol, wit);
  r.grid_spec = f.grid.spec();
  if (cert.witness_on_boundary) r.flags.push_back("witness-on-boundary");
  return r;
}

double hopf_lax_residual(const GridFunction& f, double t, double dt, const AlphaCost& alpha) {
  if (!(t > dt && dt > 0.0)) throw std::invalid_argument("hopf_lax_residual: need t > dt > 0");
  const int n = f.grid.n;
  const double h = f.grid.spacing();
  GridFunction p1 = sup_convolution(f, t, alpha);
  GridFunction p2 = sup_convolution(f, t + dt, alpha);
  GridFunction g = gradient(p1);
  double worst = 0.0;
  for (int i = 1; i + 1 < n; ++i) {
    double fwd = (p1.values[i + 1] - p1.values[i]) / h;
    double bwd = (p1.values[i] - p1.values[i - 1]) / h;
    // exclude kink points rather than resolving them
    if (std::fabs(g.values[i] - fwd) > 10.0 * h || std::fabs(g.values[i] - bwd) > 10.0 * h)
      continue;
    double dtterm = (p2.values[i] - p1.values[i]) / dt;
    double rhs = legendre_conjugate(alpha, -g.values[i]);
    if (!std::isfinite(rhs)) continue;
    worst = std::max(worst, std::fabs(dtterm - rhs));
  }
  return worst;
}

}  // namespace tel
