#include "tel/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "tel/numeric.hpp"

namespace tel {

std::string Grid1D::spec() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "[%g,%g]x%d", lo, hi, n);
  return buf;
}

GridFunction::GridFunction(const Grid1D& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n)
    throw std::invalid_argument("GridFunction: value count does not match grid");
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: values must be finite");
}

GridFunction::GridFunction(const Grid1D& g, const std::function<double(double)>& f) : grid(g) {
  values.resize(g.n);
  for (int i = 0; i < g.n; ++i) values[i] = f(g.point(i));
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: values must be finite");
}

GridMeasure::GridMeasure(const Grid1D& g, std::vector<double> w) : grid(g), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != grid.n)
    throw std::invalid_argument("GridMeasure: weight count does not match grid");
  double total = 0.0;
  for (double x : weights) {
    if (!(x >= 0.0)) throw std::invalid_argument("GridMeasure: weights must be nonnegative");
    total += x;
  }
  if (!(total > 0.0) || !std::isfinite(total))
    throw std::invalid_argument("GridMeasure: total mass must be positive and finite");
  for (double& x : weights) x /= total;
}

ProductFunction::ProductFunction(const Grid1D& gx_, const Grid1D& gy_, std::vector<double> v)
    : gx(gx_), gy(gy_), values(std::move(v)) {
  if (values.size() != static_cast<size_t>(gx.n) * gy.n)
    throw std::invalid_argument("ProductFunction: value count does not match product grid");
}

GridMeasure discretize(const Grid1D& grid, const std::function<double(double)>& density) {
  std::vector<double> w(grid.n);
  double total = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    double d = density(grid.point(i));
    if (!(d >= 0.0)) throw std::invalid_argument("discretize: density must be nonnegative");
    w[i] = d;
    total += d;
  }
  if (!(total > 0.0)) throw std::invalid_argument("discretize: density vanishes on the whole grid");
  return GridMeasure(grid, std::move(w));
}

GridMeasure discretize_gaussian(const Grid1D& grid, double mean, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("discretize_gaussian: sigma must be positive");
  return discretize(grid, [=](double x) {
    double z = (x - mean) / sigma;
    return std::exp(-0.5 * z * z);
  });
}

GridMeasure discretize_exp_power(const Grid1D& grid, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("discretize_exp_power: p must be positive");
  return discretize(grid, [=](double x) { return std::exp(-std::pow(std::fabs(x), p)); });
}

GridMeasure tilt(const GridMeasure& mu, const GridFunction& f) {
  if (f.grid != mu.grid) throw std::invalid_argument("tilt: grid mismatch");
  double m = *std::max_element(f.values.begin(), f.values.end());
  std::vector<double> w(mu.grid.n);
  for (int i = 0; i < mu.grid.n; ++i) w[i] = mu.weights[i] * std::exp(f.values[i] - m);
  return GridMeasure(mu.grid, std::move(w));
}

double relative_entropy(const GridMeasure& nu, const GridMeasure& mu) {
  if (nu.grid != mu.grid) throw std::invalid_argument("relative_entropy: grid mismatch");
  double h = 0.0;
  for (int i = 0; i < nu.grid.n; ++i) {
    double p = nu.weights[i];
    if (p <= 0.0) continue;
    double q = mu.weights[i];
    if (q <= 0.0) return kInf;
    h += p * std::log(p / q);
  }
  return h;
}

double entropy_functional(const GridMeasure& mu, const GridFunction& g) {
  if (g.grid != mu.grid) throw std::invalid_argument("entropy_functional: grid mismatch");
  double mean = 0.0, glg = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) {
    double gi = g.values[i];
    if (gi < 0.0) throw std::invalid_argument("entropy_functional: g must be nonnegative");
    mean += mu.weights[i] * gi;
    if (gi > 0.0) glg += mu.weights[i] * gi * std::log(gi);
  }
  if (mean <= 0.0) return 0.0;
  return glg - mean * std::log(mean);
}

double entropy_of_exp(const GridMeasure& mu, const GridFunction& f) {
  if (f.grid != mu.grid) throw std::invalid_argument("entropy_of_exp: grid mismatch");
  double m = *std::max_element(f.values.begin(), f.values.end());
  double s = 0.0, t = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) {
    double e = std::exp(f.values[i] - m);
    s += mu.weights[i] * e;
    t += mu.weights[i] * (f.values[i] - m) * e;
  }
  return std::exp(m) * (t - s * std::log(s));
}

GridFunction gradient(const GridFunction& f) {
  int n = f.grid.n;
  double h = f.grid.spacing();
  std::vector<double> g(n);
  g[0] = (f.values[1] - f.values[0]) / h;
  g[n - 1] = (f.values[n - 1] - f.values[n - 2]) / h;
  for (int i = 1; i < n - 1; ++i) g[i] = (f.values[i + 1] - f.values[i - 1]) / (2.0 * h);
  return GridFunction(f.grid, std::move(g));
}

double integral(const GridMeasure& mu, const GridFunction& f) {
  if (f.grid != mu.grid) throw std::invalid_argument("integral: grid mismatch");
  double s = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) s += mu.weights[i] * f.values[i];
  return s;
}

double variance(const GridMeasure& mu, const GridFunction& f) {
  double m = integral(mu, f);
  double v = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) {
    double d = f.values[i] - m;
    v += mu.weights[i] * d * d;
  }
  return v;
}

double laplace_transform(const GridMeasure& mu, const GridFunction& f, double lambda) {
  double mean = integral(mu, f);
  double shift = -kInf;
  for (int i = 0; i < mu.grid.n; ++i)
    shift = std::max(shift, lambda * (f.values[i] - mean));
  double s = 0.0;
  for (int i = 0; i < mu.grid.n; ++i)
    s += mu.weights[i] * std::exp(lambda * (f.values[i] - mean) - shift);
  return std::exp(shift) * s;
}

double osc(const GridFunction& f) {
  auto [mn, mx] = std::minmax_element(f.values.begin(), f.values.end());
  return *mx - *mn;
}

double boundary_mass(const GridMeasure& mu) { return mu.weights.front() + mu.weights.back(); }

}  // namespace tel
