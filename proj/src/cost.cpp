#include "tel/cost.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace tel {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kConvexityTol = 1e-10;
constexpr double kSampleRadius = 20.0;
constexpr int kSamplePoints = 4001;

std::string describe_point(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "t=%.12g", t);
  return buf;
}

// Sampling-based surrogate for the C^1 hypotheses: symmetry, convexity,
// concavity of alpha' on R+, alpha(0)=alpha'(0)=0 and alpha** = alpha.
void check_admissible(const AlphaCost& a) {
  if (std::fabs(a.eval(0.0)) > kZeroTol)
    throw AdmissibilityError("cost '" + a.name + "': alpha(0) != 0 at " + describe_point(0.0));
  if (std::fabs(a.deriv(0.0)) > kZeroTol)
    throw AdmissibilityError("cost '" + a.name + "': alpha'(0) != 0 at " + describe_point(0.0));

  const double h = 2.0 * kSampleRadius / (kSamplePoints - 1);
  std::vector<double> t(kSamplePoints), v(kSamplePoints);
  for (int i = 0; i < kSamplePoints; ++i) {
    t[i] = -kSampleRadius + i * h;
    v[i] = a.eval(t[i]);
    if (!std::isfinite(v[i]) || v[i] < -kZeroTol)
      throw AdmissibilityError("cost '" + a.name + "': alpha not finite nonnegative at " +
                               describe_point(t[i]));
  }
  for (int i = 0; i < kSamplePoints / 2; ++i) {
    double scale = 1.0 + std::fabs(v[i]);
    if (std::fabs(v[i] - v[kSamplePoints - 1 - i]) > 1e-9 * scale)
      throw AdmissibilityError("cost '" + a.name + "': not symmetric at " + describe_point(t[i]));
  }
  for (int i = 1; i + 1 < kSamplePoints; ++i) {
    if (v[i - 1] - 2.0 * v[i] + v[i + 1] < -kConvexityTol)
      throw AdmissibilityError("cost '" + a.name + "': not convex at " + describe_point(t[i]));
  }
  // alpha' concave on [0, R]
  int mid = kSamplePoints / 2;
  for (int i = mid + 1; i + 1 < kSamplePoints; ++i) {
    double d2 = a.deriv(t[i - 1]) - 2.0 * a.deriv(t[i]) + a.deriv(t[i + 1]);
    if (d2 > kConvexityTol)
      throw AdmissibilityError("cost '" + a.name + "': alpha' not concave on R+ at " +
                               describe_point(t[i]));
  }
  // biconjugate check on a coarse subsample
  auto conj_fn = [&](double hh) { return legendre_conjugate(a, hh); };
  for (int i = 0; i <= 40; ++i) {
    double x = -5.0 + 0.25 * i;
    double bicon = legendre_numeric(conj_fn, x, 1e9);
    double ax = a.eval(x);
    if (!(std::fabs(bicon - ax) <= 1e-6 * (1.0 + std::fabs(ax))))
      throw AdmissibilityError("cost '" + a.name + "': alpha** != alpha at " + describe_point(x));
  }
}

}  // namespace

double legendre_numeric(const std::function<double(double)>& f, double h, double radius_cap) {
  if (h == 0.0) {
    // sup of -f; for admissible profiles the sup is at 0
    return -f(0.0);
  }
  const double s = h > 0.0 ? 1.0 : -1.0;
  auto g = [&](double y) { return h * y - f(y); };
  double r = 1.0;
  while (r < radius_cap) {
    double edge = g(s * r);
    double inner = g(s * r * 0.999);
    if (!std::isfinite(edge)) break;  // f = +inf beyond here; maximizer is inside
    if (edge > inner + 1e-12 * (1.0 + std::fabs(edge))) {
      r *= 2.0;
      continue;
    }
    break;
  }
  if (r >= radius_cap) {
    double edge = g(s * radius_cap);
    double inner = g(s * radius_cap * 0.999);
    if (std::isfinite(edge) && edge > inner + 1e-12 * (1.0 + std::fabs(edge))) return kInf;
  }
  r = std::min(r, radius_cap);
  // g is concave (f convex), so golden section over the bracket is global
  double lo = std::min(0.0, s * r), hi = std::max(0.0, s * r);
  // keep clear of a potentially infinite edge value
  if (!std::isfinite(g(s * r))) {
    lo = std::min(0.0, s * r * (1.0 - 1e-9));
    hi = std::max(0.0, s * r * (1.0 - 1e-9));
  }
  double xstar = golden_max(g, lo, hi, 1e-12 * std::max(1.0, r));
  double best = g(xstar);
  best = std::max(best, g(0.0));
  return best;
}

double legendre_conjugate(const AlphaCost& alpha, double h) {
  if (std::isfinite(alpha.conj_domain_radius) && std::fabs(h) > alpha.conj_domain_radius)
    return kInf;
  if (alpha.conj_closed_form) return alpha.conj(h);
  return legendre_numeric(alpha.eval, h, std::isfinite(alpha.conj_domain_radius)
                                             ? alpha.conj_domain_radius * 2.0
                                             : 1e9);
}

double omega_ratio_sup(const std::function<double(double)>& alpha_eval, double x,
                       int grid_points) {
  if (x == 0.0) return 0.0;
  const double lo = std::log(1e-6), hi = std::log(1e6);
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    double u = std::exp(lo + (hi - lo) * i / (grid_points - 1));
    double den = alpha_eval(u);
    if (!(den > 0.0) || !std::isfinite(den)) continue;
    double num = alpha_eval(u * std::fabs(x));
    if (!std::isfinite(num)) return kInf;
    best = std::max(best, num / den);
  }
  return best;
}

double omega_alpha(const AlphaCost& alpha, double x, int grid_points) {
  if (alpha.homogeneous_quadratic) return x * x;
  return omega_ratio_sup(alpha.eval, x, grid_points);
}

double lemma51_gap(const AlphaCost& alpha, double u, double v) {
  return alpha.eval(u) + v * alpha.deriv(u) + 4.0 * alpha.eval(0.5 * v) - alpha.eval(u + v);
}

AlphaCost make_quadratic() {
  AlphaCost a;
  a.name = "quadratic";
  a.eval = [](double t) { return 0.5 * t * t; };
  a.deriv = [](double t) { return t; };
  a.conj = [](double h) { return 0.5 * h * h; };
  a.conj_domain_radius = kInf;
  a.conj_closed_form = true;
  a.homogeneous_quadratic = true;
  check_admissible(a);
  return a;
}

AlphaCost make_power_smooth(double p) {
  if (!(p >= 1.0 && p <= 2.0))
    throw std::invalid_argument("power_smooth: p must lie in [1,2]");
  AlphaCost a;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "power:%g", p);
  a.name = buf;
  // t^2 on [0,1], (2/p)(t^p - 1) + 1 on [1,inf), symmetrized; value and slope match at 1
  a.eval = [p](double t) {
    double s = std::fabs(t);
    if (s <= 1.0) return s * s;
    return (2.0 / p) * (std::pow(s, p) - 1.0) + 1.0;
  };
  a.deriv = [p](double t) {
    double s = std::fabs(t);
    double d = (s <= 1.0) ? 2.0 * s : 2.0 * std::pow(s, p - 1.0);
    return t < 0.0 ? -d : d;
  };
  a.conj_closed_form = false;
  a.conj_domain_radius = (p == 1.0) ? 2.0 : kInf;  // slope saturates at 2 when p = 1
  a.conj = [eval = a.eval, cap = a.conj_domain_radius](double h) {
    return legendre_numeric(eval, h, std::isfinite(cap) ? cap * 2.0 : 1e9);
  };
  a.homogeneous_quadratic = (p == 2.0);
  check_admissible(a);
  return a;
}

AlphaCost make_alpha21() {
  AlphaCost a;
  a.name = "alpha21";
  a.eval = [](double t) {
    double s = std::fabs(t);
    return s <= 1.0 ? 0.5 * s * s : s - 0.5;
  };
  a.deriv = [](double t) {
    double s = std::fabs(t);
    double d = s <= 1.0 ? s : 1.0;
    return t < 0.0 ? -d : d;
  };
  a.conj = [](double h) { return std::fabs(h) <= 1.0 ? 0.5 * h * h : kInf; };
  a.conj_domain_radius = 1.0;
  a.conj_closed_form = true;
  check_admissible(a);
  return a;
}

AlphaCost make_scaled(const AlphaCost& base, double u) {
  if (!(u >= 1.0)) throw std::invalid_argument("scaled: u must be >= 1");
  AlphaCost a;
  a.name = "scaled:" + base.name + ":" + [&] {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", u);
    return std::string(buf);
  }();
  a.eval = [base = base.eval, u](double t) { return u * base(t / u); };
  a.deriv = [base = base.deriv, u](double t) { return base(t / u); };
  // c_u*(h) = u c*(h)
  a.conj = [base = base.conj, u](double h) { return u * base(h); };
  a.conj_domain_radius = base.conj_domain_radius;
  a.conj_closed_form = base.conj_closed_form;
  a.homogeneous_quadratic = base.homogeneous_quadratic;
  if (!a.conj_closed_form) {
    a.conj = [eval = a.eval, cap = a.conj_domain_radius](double h) {
      return legendre_numeric(eval, h, std::isfinite(cap) ? cap * 2.0 : 1e9);
    };
  }
  check_admissible(a);
  return a;
}

AlphaCost make_custom(const std::string& name, std::function<double(double)> eval,
                      std::function<double(double)> deriv) {
  AlphaCost a;
  a.name = name;
  a.eval = std::move(eval);
  a.deriv = std::move(deriv);
  a.conj_closed_form = false;
  a.conj_domain_radius = kInf;
  a.conj = [ev = a.eval](double h) { return legendre_numeric(ev, h, 1e9); };
  check_admissible(a);
  return a;
}

AlphaCost make_builtin(const std::string& id) {
  if (id == "quadratic") return make_quadratic();
  if (id == "alpha21") return make_alpha21();
  if (id.rfind("power:", 0) == 0) {
    double p = std::strtod(id.c_str() + 6, nullptr);
    return make_power_smooth(p);
  }
  if (id.rfind("scaled:", 0) == 0) {
    auto rest = id.substr(7);
    auto pos = rest.rfind(':');
    if (pos == std::string::npos)
      throw std::invalid_argument("cost id '" + id + "': expected scaled:<base>:<u>");
    double u = std::strtod(rest.c_str() + pos + 1, nullptr);
    return make_scaled(make_builtin(rest.substr(0, pos)), u);
  }
  throw std::invalid_argument(
      "unknown cost id '" + id +
      "'; valid ids: quadratic, power:<p>, alpha21, scaled:<base>:<u>");
}

}  // namespace tel
