#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace tel {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Golden-section maximizer of a unimodal function on [lo, hi].
// Returns the abscissa of the maximum.
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         double xtol = 1e-12, int max_iter = 250) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double xtol = 1e-12, int max_iter = 250) {
  return golden_max([&](double x) { return -f(x); }, lo, hi, xtol, max_iter);
}

}  // namespace tel
