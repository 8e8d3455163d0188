#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tel {

// Uniform 1D grid with n points on [lo, hi].
struct Grid1D {
  double lo = 0.0;
  double hi = 1.0;
  int n = 3;

  Grid1D() = default;
  Grid1D(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
    if (n < 3) throw std::invalid_argument("Grid1D: need at least 3 points");
    if (!(lo < hi)) throw std::invalid_argument("Grid1D: lo must be < hi");
  }

  double spacing() const { return (hi - lo) / (n - 1); }
  double point(int i) const { return lo + i * spacing(); }
  std::vector<double> points() const {
    std::vector<double> p(n);
    for (int i = 0; i < n; ++i) p[i] = point(i);
    return p;
  }
  bool operator==(const Grid1D& o) const { return lo == o.lo && hi == o.hi && n == o.n; }
  bool operator!=(const Grid1D& o) const { return !(*this == o); }
  std::string spec() const;
};

struct GridFunction {
  Grid1D grid;
  std::vector<double> values;

  GridFunction() = default;
  GridFunction(const Grid1D& g, std::vector<double> v);
  GridFunction(const Grid1D& g, const std::function<double(double)>& f);
  double operator[](int i) const { return values[i]; }
};

// Probability measure on a grid; the weights are the quadrature.
struct GridMeasure {
  Grid1D grid;
  std::vector<double> weights;

  GridMeasure() = default;
  // Normalizes nonnegative weights to total mass 1.
  GridMeasure(const Grid1D& g, std::vector<double> w);
};

// Product of at most two 1D measures.
struct ProductMeasure {
  std::vector<GridMeasure> factors;

  explicit ProductMeasure(std::vector<GridMeasure> f) : factors(std::move(f)) {
    if (factors.empty() || factors.size() > 2)
      throw std::invalid_argument("ProductMeasure: need 1 or 2 factors");
  }
  int dim() const { return static_cast<int>(factors.size()); }
};

// Function on a 2-fold product grid, values row-major: v[i*gy.n + j] = f(x_i, y_j).
struct ProductFunction {
  Grid1D gx, gy;
  std::vector<double> values;

  ProductFunction(const Grid1D& gx_, const Grid1D& gy_, std::vector<double> v);
  double at(int i, int j) const { return values[static_cast<size_t>(i) * gy.n + j]; }
};

GridMeasure discretize(const Grid1D& grid, const std::function<double(double)>& density);
GridMeasure discretize_gaussian(const Grid1D& grid, double mean, double sigma);
// dnu_p(t) proportional to exp(-|t|^p)
GridMeasure discretize_exp_power(const Grid1D& grid, double p);

// weights proportional to e^f * mu, overflow-guarded by max subtraction
GridMeasure tilt(const GridMeasure& mu, const GridFunction& f);

// H(nu|mu) = sum nu log(nu/mu); +inf when nu charges a point where mu vanishes
double relative_entropy(const GridMeasure& nu, const GridMeasure& mu);

// Ent_mu(g) = int g log g dmu - int g dmu log int g dmu, with 0 log 0 = 0
double entropy_functional(const GridMeasure& mu, const GridFunction& g);

// Ent_mu(e^f), computed with max-shift so that e^f never overflows by itself
double entropy_of_exp(const GridMeasure& mu, const GridFunction& f);

// central differences in the interior, one-sided first order at the boundary
GridFunction gradient(const GridFunction& f);

double integral(const GridMeasure& mu, const GridFunction& f);
double variance(const GridMeasure& mu, const GridFunction& f);
// int e^{lambda (f - int f dmu)} dmu, max-shifted
double laplace_transform(const GridMeasure& mu, const GridFunction& f, double lambda);
// sup f - inf f
double osc(const GridFunction& f);
// mass of the two boundary points; truncation diagnostic
double boundary_mass(const GridMeasure& mu);

}  // namespace tel
