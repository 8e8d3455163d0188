#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tel/family.hpp"
#include "tel/grid.hpp"
#include "tel/numeric.hpp"
#include "tel/rng.hpp"

using namespace tel;

namespace {
const Grid1D kGrid(-8.0, 8.0, 1601);
}

TEST_CASE("grid invariants") {
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D(1.0, 1.0, 5), std::invalid_argument);
  Grid1D g(0.0, 1.0, 101);
  CHECK(g.spacing() == doctest::Approx(0.01));
  CHECK(g.point(100) == doctest::Approx(1.0));
}

TEST_CASE("discretize normalizes and centers") {
  GridMeasure mu = discretize_gaussian(kGrid, 0.0, 1.0);
  double sum = 0.0, mean = 0.0;
  for (int i = 0; i < kGrid.n; ++i) {
    sum += mu.weights[i];
    mean += mu.weights[i] * kGrid.point(i);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(mean) < 1e-10);

  GridMeasure nu = discretize_exp_power(Grid1D(-12.0, 12.0, 2401), 1.5);
  double s2 = 0.0;
  for (double w : nu.weights) s2 += w;
  CHECK(s2 == doctest::Approx(1.0).epsilon(1e-12));

  GridMeasure uni = discretize(Grid1D(0.0, 1.0, 101), [](double) { return 3.7; });
  for (double w : uni.weights) CHECK(w == doctest::Approx(1.0 / 101).epsilon(1e-12));

  CHECK_THROWS_AS(discretize(kGrid, [](double) { return 0.0; }), std::invalid_argument);
}

TEST_CASE("tilt") {
  GridMeasure mu = discretize_gaussian(kGrid, 0.0, 1.0);
  SUBCASE("constant tilt is identity") {
    GridFunction c(kGrid, [](double) { return 4.2; });
    GridMeasure t = tilt(mu, c);
    for (int i = 0; i < kGrid.n; ++i)
      CHECK(t.weights[i] == doctest::Approx(mu.weights[i]).epsilon(1e-12));
  }
  SUBCASE("gaussian tilt identity") {
    // e^{m x - m^2/2} dN(0,1) = dN(m,1); check in total variation
    double m = 0.5;
    GridFunction f(kGrid, [=](double x) { return m * x - 0.5 * m * m; });
    GridMeasure got = tilt(mu, f);
    GridMeasure want = discretize_gaussian(kGrid, m, 1.0);
    double tv = 0.0;
    for (int i = 0; i < kGrid.n; ++i) tv += std::fabs(got.weights[i] - want.weights[i]);
    CHECK(0.5 * tv < 1e-6);
  }
  SUBCASE("two point example") {
    Grid1D g2(0.0, 2.0, 3);
    GridMeasure u(g2, {1.0, 0.0, 1.0});
    GridFunction f(g2, {std::log(3.0), 0.0, 0.0});
    GridMeasure t = tilt(u, f);
    CHECK(t.weights[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(t.weights[2] == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("tilt invariant under constant shifts") {
    GridFunction f(kGrid, [](double x) { return std::sin(x); });
    GridFunction fshift(kGrid, [](double x) { return std::sin(x) + 250.0; });
    GridMeasure a = tilt(mu, f), b = tilt(mu, fshift);
    for (int i = 0; i < kGrid.n; ++i)
      CHECK(a.weights[i] == doctest::Approx(b.weights[i]).epsilon(1e-12));
  }
}

TEST_CASE("relative entropy") {
  GridMeasure mu = discretize_gaussian(kGrid, 0.0, 1.0);
  CHECK(relative_entropy(mu, mu) == doctest::Approx(0.0));

  SUBCASE("two point formula") {
    Grid1D g(0.0, 1.0, 3);
    GridMeasure base(g, {1.0, 0.0, 1.0});
    GridMeasure biased(g, {0.75, 0.0, 0.25});
    double want = 0.75 * std::log(1.5) + 0.25 * std::log(0.5);
    CHECK(relative_entropy(biased, base) == doctest::Approx(want).epsilon(1e-12));
    CHECK(want == doctest::Approx(0.130812).epsilon(1e-5));
  }
  SUBCASE("gaussian translate: KL = m^2/2") {
    for (double m : {0.25, 0.5, 1.0}) {
      GridMeasure nu = discretize_gaussian(kGrid, m, 1.0);
      CHECK(relative_entropy(nu, mu) == doctest::Approx(0.5 * m * m).epsilon(1e-4));
    }
  }
  SUBCASE("absolute continuity failure gives +inf") {
    Grid1D g(0.0, 1.0, 3);
    GridMeasure a(g, {1.0, 1.0, 0.0});
    GridMeasure b(g, {0.0, 1.0, 1.0});
    CHECK(relative_entropy(b, a) == kInf);
  }
  SUBCASE("grid mismatch throws") {
    GridMeasure other = discretize_gaussian(Grid1D(-8.0, 8.0, 801), 0.0, 1.0);
    CHECK_THROWS_AS(relative_entropy(other, mu), std::invalid_argument);
  }
  SUBCASE("nonnegative, zero only at equality") {
    TestFamily fam(17);
    for (int k = 0; k < 20; ++k) {
      GridMeasure nu = fam.measure(mu, k);
      double h = relative_entropy(nu, mu);
      CHECK(h >= -1e-13);
      double tv = 0.0;
      for (int i = 0; i < kGrid.n; ++i) tv += std::fabs(nu.weights[i] - mu.weights[i]);
      if (tv > 1e-6) CHECK(h > 0.0);  // strictly positive away from equality
    }
  }
}

TEST_CASE("entropy functional") {
  GridMeasure mu = discretize_gaussian(kGrid, 0.0, 1.0);
  SUBCASE("constants vanish") {
    GridFunction c(kGrid, [](double) { return 2.5; });
    CHECK(entropy_functional(mu, c) == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("identity with relative entropy of the tilt") {
    GridFunction f(kGrid, [](double x) { return 0.5 * x - 0.125; });
    std::vector<double> ef(kGrid.n);
    double integral_ef = 0.0;
    for (int i = 0; i < kGrid.n; ++i) {
      ef[i] = std::exp(f.values[i]);
      integral_ef += mu.weights[i] * ef[i];
    }
    double lhs = entropy_functional(mu, GridFunction(kGrid, ef));
    double rhs = integral_ef * relative_entropy(tilt(mu, f), mu);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    CHECK(lhs == doctest::Approx(entropy_of_exp(mu, f)).epsilon(1e-12));
  }
  SUBCASE("two point value") {
    Grid1D g(0.0, 1.0, 3);
    GridMeasure u(g, {1.0, 0.0, 1.0});
    GridFunction gfun(g, {3.0, 0.0, 1.0});
    double want = 0.5 * 3.0 * std::log(3.0) - 2.0 * std::log(2.0);
    CHECK(entropy_functional(u, gfun) == doctest::Approx(want).epsilon(1e-12));
    CHECK(want == doctest::Approx(0.261624).epsilon(1e-5));
  }
  SUBCASE("scaling Ent(cg) = c Ent(g)") {
    GridFunction g(kGrid, [](double x) { return 1.0 + std::sin(x) * std::sin(x); });
    double e1 = entropy_functional(mu, g);
    GridFunction g3(kGrid, g.values);
    for (double& v : g3.values) v *= 3.0;
    CHECK(entropy_functional(mu, g3) == doctest::Approx(3.0 * e1).epsilon(1e-12));
  }
  SUBCASE("negative g throws") {
    GridFunction g(kGrid, [](double x) { return x; });
    CHECK_THROWS_AS(entropy_functional(mu, g), std::invalid_argument);
  }
}

TEST_CASE("gradient") {
  GridFunction lin(kGrid, [](double x) { return x; });
  GridFunction g = gradient(lin);
  for (double v : g.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  GridFunction sq(kGrid, [](double x) { return 0.5 * x * x; });
  GridFunction gs = gradient(sq);
  for (int i = 1; i + 1 < kGrid.n; ++i)
    CHECK(gs.values[i] == doctest::Approx(kGrid.point(i)).epsilon(1e-10));

  Grid1D fine(-3.0, 3.0, 601);  // h = 0.01
  GridFunction s(fine, [](double x) { return std::sin(x); });
  GridFunction gsin = gradient(s);
  double worst = 0.0;
  for (int i = 1; i + 1 < fine.n; ++i)
    worst = std::max(worst, std::fabs(gsin.values[i] - std::cos(fine.point(i))));
  CHECK(worst < 2e-5);
}

TEST_CASE("moments and laplace") {
  GridMeasure mu = discretize_gaussian(kGrid, 0.0, 1.0);
  GridFunction c(kGrid, [](double) { return 7.0; });
  CHECK(variance(mu, c) == doctest::Approx(0.0));
  GridFunction x(kGrid, [](double t) { return t; });
  CHECK(variance(mu, x) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(laplace_transform(mu, x, 0.0) == doctest::Approx(1.0));
  CHECK(laplace_transform(mu, x, 1.0) == doctest::Approx(std::exp(0.5)).epsilon(1e-6));
  CHECK(osc(GridFunction(kGrid, [](double t) { return std::sin(t); })) ==
        doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("grid refinement: entropy converges at second order or better") {
  // errors shrink by at least ~4x per halving of h
  auto H_at = [](int n) {
    Grid1D g(-12.0, 12.0, n);
    GridMeasure nu = discretize_exp_power(g, 1.5);
    GridMeasure mu = discretize_gaussian(g, 0.3, 1.1);
    return relative_entropy(nu, mu);
  };
  double h1 = H_at(301), h2 = H_at(601), h3 = H_at(1201);
  double d1 = std::fabs(h2 - h1), d2 = std::fabs(h3 - h2);
  CHECK(d2 <= d1 / 4.0 + 1e-12);
}
