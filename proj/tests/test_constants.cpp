#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tel/constants.hpp"
#include "tel/rng.hpp"
#include "tel/verify.hpp"

using namespace tel;

TEST_CASE("ell family") {
  SUBCASE("ell(0) = 0 and ell/eta < 1 on (0,1)") {
    for (double eta : {0.3, 1.0, 2.5})
      for (double v : {0.1, 0.5, 0.9}) {
        CHECK(ell(0.0, eta, v) == doctest::Approx(0.0));
        for (double t = 0.05; t < 1.0; t += 0.05) CHECK(ell(t, eta, v) / eta < 1.0);
      }
  }
  SUBCASE("ell_at_T matches ell at T(v) to 1e-14") {
    for (double eta : {0.5, 1.0, 3.0})
      for (double v : {0.2, 0.5, 0.8}) {
        double direct = ell(T_of_v(v), eta, v);
        CHECK(std::fabs(direct - ell_at_T(eta, v)) <= 1e-14 * (1.0 + std::fabs(direct)));
      }
  }
  SUBCASE("ell' = eta (1 - (1-v)/(1-t)^v) >= 0 up to T(v), by finite differences") {
    double eta = 1.0;
    for (double v : {0.3, 0.6}) {
      double T = T_of_v(v);
      for (double t = 0.01; t < T; t += 0.01) {
        double fd = (ell(t + 1e-7, eta, v) - ell(t - 1e-7, eta, v)) / 2e-7;
        double closed = eta * (1.0 - (1.0 - v) / std::pow(1.0 - t, v));
        CHECK(fd == doctest::Approx(closed).epsilon(1e-5));
        CHECK(fd >= -1e-7);
      }
    }
  }
  SUBCASE("C3 ell(T) = v (1-v)^{1/v} under the coupling v = 1 - C3 eta") {
    for (double c3 : {0.5, 1.0, 4.0})
      for (double v : {0.25, 0.5, 0.75}) {
        double eta = (1.0 - v) / c3;
        double lhs = c3 * ell_at_T(eta, v);
        double rhs = v * std::pow(1.0 - v, 1.0 / v);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
  }
}

TEST_CASE("sup over v of v (1-v)^{1/v}") {
  SupVResult r = sup_v_functional();
  SUBCASE("value at one half") {
    double g = 0.5 * std::pow(0.5, 2.0);
    CHECK(g == doctest::Approx(0.125));
    CHECK(r.g_star >= g);
  }
  SUBCASE("dense scan oracle") {
    double best = 0.0, arg = 0.0;
    const int n = 1000000;
    for (int i = 1; i < n; ++i) {
      double v = static_cast<double>(i) / n;
      double g = v * std::pow(1.0 - v, 1.0 / v);
      if (g > best) {
        best = g;
        arg = v;
      }
    }
    CHECK(r.g_star == doctest::Approx(best).epsilon(1e-10));
    CHECK(std::fabs(r.v_star - arg) < 1e-5);
  }
  SUBCASE("bracket and the 7.7 bound") {
    CHECK(r.g_star >= 0.1298);
    CHECK(r.g_star <= 0.1306);
    CHECK(r.v_star >= 0.58);
    CHECK(r.v_star <= 0.64);
    CHECK(1.0 / r.g_star <= 7.7);
  }
}

TEST_CASE("phi_min closed form and numeric agreement") {
  SUBCASE("pinned values") {
    PhiMinResult a = phi_min(1.0, 1.0);
    CHECK(a.t_min == doctest::Approx(3.0));
    CHECK(a.phi_min == doctest::Approx(4.5));
    PhiMinResult b = phi_min(2.0, 0.5);
    CHECK(b.t_min == doctest::Approx(3.0));
    CHECK(b.phi_min == doctest::Approx(9.0));
  }
  SUBCASE("numeric cross-check on random parameters") {
    CounterRng rng(5);
    for (int k = 0; k < 100; ++k) {
      double lam = rng.uniform(0.1, 3.0), C = rng.uniform(0.1, 3.0);
      PhiMinResult a = phi_min(lam, C);
      PhiMinResult n = phi_min_numeric(lam, C);
      CHECK(std::fabs(a.t_min - n.t_min) <= 1e-8 * (1.0 + a.t_min));
      CHECK(std::fabs(a.phi_min - n.phi_min) <= 1e-8 * (1.0 + a.phi_min));
    }
  }
}

TEST_CASE("bli constant") {
  CHECK(bli_constant(1.0, 1.0) == doctest::Approx(9.0 * std::exp(std::sqrt(5.0))).epsilon(1e-12));
  CHECK(std::fabs(bli_constant(1e-6, 1.0) - 1.0) < 1e-5);
  CHECK(bli_constant(1.9999, 1.0) > 1e6);  // pole at kappa = 2/sqrt(C)
  CHECK_THROWS_AS(bli_constant(2.1, 1.0), std::invalid_argument);
}

TEST_CASE("poincare linearization") {
  Grid1D grid(-8.0, 8.0, 1601);
  GridMeasure mu = discretize_gaussian(grid, 0.0, 1.0);
  TestFamily fam(83);
  std::vector<double> eps = {0.1, 0.05, 0.025, 0.0125};
  for (int k = 0; k < 5; ++k) {
    GridFunction f = fam.function(grid, k);
    InequalityReport r = poincare_linearization_check(mu, f, eps);
    CHECK(r.pass);
  }
}

TEST_CASE("run_chain on the gaussian") {
  Grid1D grid(-8.0, 8.0, 1601);
  GridMeasure mu = discretize_gaussian(grid, 0.0, 1.0);
  ChainReport rep = run_chain(mu, make_quadratic(), 1.0, 7);
  CHECK(rep.tc.passes == rep.tc.count);
  CHECK(rep.iclsi.passes == rep.iclsi.count);
  CHECK(rep.rmlsi.passes == rep.rmlsi.count);
  CHECK(rep.rmlsi.count > 0);
  CHECK(rep.hatC_tc >= 0.99);
  CHECK(rep.hatC_tc <= 1.0);
  CHECK(rep.eight_c3_ok);
  CHECK(rep.all_pass);
  // report serializes
  auto j = rep.to_json();
  CHECK(j["tc"]["count"].get<int>() == rep.tc.count);
}
