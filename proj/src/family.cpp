#include "tel/family.hpp"

#include <cmath>

namespace tel {

namespace {
enum Stream : uint64_t { kFunctions = 1, kMeasures = 2, kLipschitz = 3, kProduct = 4 };

struct SpanCoeffs {
  double a0, a1, a2, a3, a4;  // 1, x, x^2, sin(wx), mollified |x-a|
  double omega, anchor, eps;
};

double span_eval(const SpanCoeffs& c, double x) {
  double moll = std::sqrt((x - c.anchor) * (x - c.anchor) + c.eps * c.eps) - c.eps;
  return c.a0 + c.a1 * x + c.a2 * x * x + c.a3 * std::sin(c.omega * x) + c.a4 * moll;
}
}  // namespace

GridFunction TestFamily::function(const Grid1D& grid, int index) const {
  CounterRng rng(seed, kFunctions + (static_cast<uint64_t>(index) << 8));
  SpanCoeffs c;
  c.a0 = rng.uniform(-1.0, 1.0);
  c.a1 = rng.uniform(-1.0, 1.0);
  c.a2 = rng.uniform(-1.0, 1.0);
  c.a3 = rng.uniform(-1.0, 1.0);
  c.a4 = rng.uniform(-1.0, 1.0);
  c.omega = rng.uniform(0.5, 3.0);
  c.anchor = rng.uniform(-2.0, 2.0);
  c.eps = 0.25;
  return GridFunction(grid, [&](double x) { return span_eval(c, x); });
}

GridFunction TestFamily::lipschitz_function(const Grid1D& grid, int index) const {
  CounterRng rng(seed, kLipschitz + (static_cast<uint64_t>(index) << 8));
  SpanCoeffs c;
  c.a0 = rng.uniform(-1.0, 1.0);
  c.a1 = rng.uniform(-1.0, 1.0);
  c.a2 = rng.uniform(-0.2, 0.2);  // keep curvature mild
  c.a3 = rng.uniform(-1.0, 1.0);
  c.a4 = rng.uniform(-1.0, 1.0);
  c.omega = rng.uniform(0.5, 1.2);
  c.anchor = rng.uniform(-2.0, 2.0);
  c.eps = 0.5;
  GridFunction f(grid, [&](double x) { return span_eval(c, x); });
  // scale to discrete Lipschitz constant exactly <= 1
  double lip = 0.0;
  double h = grid.spacing();
  for (int i = 0; i + 1 < grid.n; ++i)
    lip = std::max(lip, std::fabs(f.values[i + 1] - f.values[i]) / h);
  if (lip > 1.0)
    for (double& v : f.values) v /= lip;
  return f;
}

GridMeasure TestFamily::measure(const GridMeasure& base, int index) const {
  if (index < 3) {
    // near-translate anchors: tilt by m x + 0.02 x^2
    static constexpr double kShift[3] = {0.3, 0.5, 0.7};
    double m = kShift[index];
    GridFunction f(base.grid, [&](double x) { return m * x + 0.02 * x * x; });
    return tilt(base, f);
  }
  GridFunction f = function(base.grid, index + 1000);
  double o = osc(f);
  if (o > 2.0) {
    double s = 2.0 / o;
    for (double& v : f.values) v *= s;
  }
  return tilt(base, f);
}

ProductFunction TestFamily::product_function(const Grid1D& grid, int index) const {
  CounterRng rng(seed, kProduct + (static_cast<uint64_t>(index) << 8));
  GridFunction u = function(grid, index + 2000);
  GridFunction v = function(grid, index + 3000);
  double cu = rng.uniform(-0.5, 0.5);
  double cv = rng.uniform(-0.5, 0.5);
  double cc = rng.uniform(-0.3, 0.3);
  double w1 = rng.uniform(0.3, 1.5), w2 = rng.uniform(0.3, 1.5);
  std::vector<double> vals(static_cast<size_t>(grid.n) * grid.n);
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j) {
      double x = grid.point(i), y = grid.point(j);
      vals[static_cast<size_t>(i) * grid.n + j] =
          cu * u.values[i] + cv * v.values[j] + cc * std::sin(w1 * x) * std::sin(w2 * y);
    }
  return ProductFunction(grid, grid, std::move(vals));
}

}  // namespace tel
