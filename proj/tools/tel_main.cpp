// tel: command-line front end for the transport-entropy inequality lab.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "tel/config.hpp"
#include "tel/constants.hpp"
#include "tel/cost.hpp"
#include "tel/family.hpp"
#include "tel/grid.hpp"
#include "tel/parallel.hpp"
#include "tel/semigroup.hpp"
#include "tel/transport.hpp"
#include "tel/verify.hpp"

using nlohmann::ordered_json;

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw tel::ConfigError("cannot write '" + out_path + "'");
  out << text;
}

int finish_reports(const std::vector<tel::InequalityReport>& reports, const std::string& out_path,
                   const std::string& csv_path) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  write_output(arr.dump(2) + "\n", out_path);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw tel::ConfigError("cannot write '" + csv_path + "'");
    csv << tel::reports_csv(reports);
  }
  return tel::all_pass(reports) ? 0 : 1;
}

// Smooth a family member into a certified semi-convex test function.
tel::GridFunction tame(const tel::GridFunction& f, double t, const tel::AlphaCost& alpha) {
  tel::GridFunction g = f;
  double lip = tel::lipschitz_constant(g);
  if (lip > 1.0)
    for (double& v : g.values) v /= lip;
  return tel::sup_convolution(g, t, alpha);
}

std::vector<tel::InequalityReport> run_verify(const std::string& ineq, const tel::GridMeasure& mu,
                                              const tel::AlphaCost& alpha, double C,
                                              uint64_t seed, double lambda, double K, double eta,
                                              double kappa, int count, double tol) {
  tel::TestFamily family(seed);
  std::vector<tel::InequalityReport> reports;
  auto functions = [&](int n) {
    std::vector<tel::GridFunction> fs;
    for (int i = 0; i < n; ++i) fs.push_back(family.function(mu.grid, i));
    return fs;
  };

  if (ineq == "tc") {
    return tel::verify_Tc(mu, C, alpha, family, count);
  }
  if (ineq == "iclsi") {
    std::vector<double> lambdas;
    if (lambda > 0.0)
      lambdas.push_back(lambda);
    else
      for (int k = 1; k <= 9; ++k) lambdas.push_back(0.1 * k / C);
    int nf = count > 0 ? count : family.function_count;
    for (const auto& f : functions(nf))
      for (double l : lambdas) reports.push_back(tel::verify_ICLSI(mu, C, l, f, alpha, tol));
    return reports;
  }
  if (ineq == "rmlsi" || ineq == "rlsi") {
    int nf = count > 0 ? count : family.function_count;
    for (int i = 0; i < nf; ++i) {
      tel::GridFunction g = tame(family.function(mu.grid, i), 1.0, alpha);
      double cert = tel::semiconvexity_defect(g, alpha).K_min;
      double Kuse = K >= 0.0 ? K : cert + 1e-12;
      if (Kuse >= 1.0 / C || cert > Kuse + 1e-12) continue;  // inadmissible
      if (ineq == "rmlsi") {
        double eta_use = eta > 0.0 ? eta : (1.0 / C - Kuse) / 2.0;
        if (eta_use + Kuse >= 1.0 / C) continue;
        reports.push_back(tel::verify_rMLSI(mu, C, alpha, Kuse, eta_use, g, tol));
      } else {
        reports.push_back(tel::verify_rLSI(mu, C, Kuse, g, tol));
      }
    }
    return reports;
  }
  if (ineq == "bg") {
    double l = lambda > 0.0 ? lambda : 1.0 / C;
    int nf = count > 0 ? count : family.function_count;
    for (const auto& f : functions(nf))
      reports.push_back(tel::verify_bobkov_gotze(mu, l, f, alpha, tol));
    return reports;
  }
  if (ineq == "ls1") {
    std::vector<double> lambdas;
    if (lambda > 0.0)
      lambdas.push_back(lambda);
    else
      for (int k = 1; k <= 9; ++k) lambdas.push_back(0.1 * k / C);
    int nf = count > 0 ? count : family.function_count;
    for (const auto& f : functions(nf))
      for (double l : lambdas) reports.push_back(tel::verify_LS1(mu, C, l, f, alpha, tol));
    return reports;
  }
  if (ineq == "ls2") {
    int nf = count > 0 ? count : family.function_count;
    for (int i = 0; i < nf; ++i) {
      // concavify: f = -P_t(-member) has certified semi-concavity
      tel::GridFunction g = family.function(mu.grid, i);
      for (double& v : g.values) v = -v;
      g = tame(g, 1.0, alpha);
      for (double& v : g.values) v = -v;
      tel::GridFunction neg = g;
      for (double& v : neg.values) v = -v;
      double cert = tel::semiconvexity_defect(neg, alpha).K_min;
      double Kuse = K >= 0.0 ? K : cert + 1e-12;
      if (Kuse >= 1.0 / C || cert > Kuse + 1e-12) continue;
      double eta_use = eta > 0.0 ? eta : (1.0 / C - Kuse) / 2.0;
      if (eta_use + Kuse >= 1.0 / C) continue;
      reports.push_back(tel::verify_LS2(mu, C, Kuse, eta_use, g, alpha, tol));
    }
    return reports;
  }
  if (ineq == "poincare") {
    int nf = count > 0 ? count : family.function_count;
    for (const auto& f : functions(nf))
      reports.push_back(tel::verify_poincare(mu, C, f, tol));
    return reports;
  }
  if (ineq == "bli") {
    double kap = kappa > 0.0 ? kappa : 1.0 / std::sqrt(C);
    int nf = count > 0 ? count : family.function_count;
    for (const auto& f : functions(nf)) reports.push_back(tel::verify_BLI(mu, C, kap, f, tol));
    return reports;
  }
  if (ineq == "herbst") {
    int nf = count > 0 ? count : 20;
    tel::AlphaCost quad = tel::make_quadratic();
    std::vector<double> lambdas = {0.5, 1.0, 2.0};
    if (lambda > 0.0) lambdas = {lambda};
    for (int i = 0; i < nf; ++i) {
      tel::GridFunction g = tel::sup_convolution(family.lipschitz_function(mu.grid, i), 1.0, quad);
      double cert = tel::semiconvexity_defect(g, quad).K_min + 1e-12;
      for (double l : lambdas) {
        if (cert > 0.0 && l >= 1.0 / (C * cert)) continue;
        reports.push_back(tel::herbst_check(mu, C, cert, g, l, tol));
      }
    }
    return reports;
  }
  if (ineq == "tensor") {
    int nf = count > 0 ? count : 10;
    for (int i = 0; i < nf; ++i)
      reports.push_back(tel::tensorization_check(mu, family.product_function(mu.grid, i), tol));
    return reports;
  }
  if (ineq == "perturb") {
    tel::GridFunction phi(mu.grid, [](double x) { return 0.5 * std::sin(x); });
    return tel::perturbation_check(mu, C, phi, alpha, family, count);
  }
  if (ineq == "conc") {
    // A = left part of the line with mass >= 1/2
    std::vector<char> indicator(mu.grid.n, 0);
    double acc = 0.0;
    for (int i = 0; i < mu.grid.n; ++i) {
      indicator[i] = 1;
      acc += mu.weights[i];
      if (acc >= 0.5) break;
    }
    std::vector<double> rs;
    for (double r = 0.5; r <= 8.0 + 1e-9; r += 0.5) rs.push_back(r);
    auto prof = tel::concentration_profile(tel::ProductMeasure({mu}), indicator, rs, C);
    for (const auto& row : prof.rows) {
      tel::InequalityReport r = tel::make_report(
          "concentration", C, row.bound, row.measure, 1e-12,
          "r=" + std::to_string(row.r) + (row.enforced ? "" : " (below r0)"));
      r.grid_spec = mu.grid.spec();
      r.boundary_mass = tel::boundary_mass(mu);
      if (!row.enforced) r.flags.push_back("below-r0");
      reports.push_back(r);
    }
    return reports;
  }
  throw tel::ConfigError("unknown --ineq '" + ineq +
                         "'; expected one of tc, iclsi, rmlsi, rlsi, bg, ls1, ls2, poincare, "
                         "bli, herbst, tensor, perturb, conc");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transport-entropy inequality lab"};
  app.require_subcommand(1);

  std::string mu_path, nu_path, cost_id = "quadratic", f_path, out_path, csv_path, phi_path;
  std::string op, ineq, which, in_path, mode = "gradient";
  double C = 1.0, lambda = -1.0, K = -1.0, eta = -1.0, kappa = -1.0, tol = -1.0;
  double v_param = 0.5, t_param = 0.5, eta_param = 1.0;
  uint64_t seed = 0;
  int count = -1;

  auto* cmd_transport = app.add_subcommand("transport", "optimal transport cost between measures");
  cmd_transport->add_option("--cost", cost_id);
  cmd_transport->add_option("--nu", nu_path)->required();
  cmd_transport->add_option("--mu", mu_path)->required();
  cmd_transport->add_option("--out", out_path);

  auto* cmd_semigroup = app.add_subcommand("semigroup", "inf/sup-convolution of a grid function");
  cmd_semigroup->add_option("--op", op)->required()->check(CLI::IsMember({"inf", "sup"}));
  cmd_semigroup->add_option("--lambda", lambda)->required();
  cmd_semigroup->add_option("--cost", cost_id);
  cmd_semigroup->add_option("--f", f_path)->required();
  cmd_semigroup->add_option("--out", out_path);

  auto* cmd_certify = app.add_subcommand("certify", "semi-convexity certificate for a function");
  cmd_certify->add_option("--f", f_path)->required();
  cmd_certify->add_option("--cost", cost_id);
  cmd_certify->add_option("--mode", mode)->check(CLI::IsMember({"gradient", "midpoint"}));
  cmd_certify->add_option("--out", out_path);

  auto* cmd_verify = app.add_subcommand("verify", "run an inequality verifier sweep");
  cmd_verify->add_option("--ineq", ineq)->required();
  cmd_verify->add_option("--mu", mu_path)->required();
  cmd_verify->add_option("--cost", cost_id);
  cmd_verify->add_option("--C", C);
  cmd_verify->add_option("--seed", seed);
  cmd_verify->add_option("--lambda", lambda);
  cmd_verify->add_option("--K", K);
  cmd_verify->add_option("--eta", eta);
  cmd_verify->add_option("--kappa", kappa);
  cmd_verify->add_option("--count", count);
  cmd_verify->add_option("--tol", tol);
  cmd_verify->add_option("--phi", phi_path);
  cmd_verify->add_option("--out", out_path);
  cmd_verify->add_option("--csv", csv_path);

  auto* cmd_constants = app.add_subcommand("constants", "scalar constants of the lab");
  cmd_constants->add_option("--which", which)
      ->required()
      ->check(CLI::IsMember({"supv", "phimin", "bli", "ell"}));
  cmd_constants->add_option("--lambda", lambda);
  cmd_constants->add_option("--C", C);
  cmd_constants->add_option("--kappa", kappa);
  cmd_constants->add_option("--v", v_param);
  cmd_constants->add_option("--t", t_param);
  cmd_constants->add_option("--eta", eta_param);
  cmd_constants->add_option("--out", out_path);

  auto* cmd_chain = app.add_subcommand("chain", "implication-chain experiment over a seeded family");
  cmd_chain->add_option("--mu", mu_path)->required();
  cmd_chain->add_option("--cost", cost_id);
  cmd_chain->add_option("--C", C);
  cmd_chain->add_option("--seed", seed);
  cmd_chain->add_option("--out", out_path);

  auto* cmd_report = app.add_subcommand("report", "re-emit a JSON report array as CSV");
  cmd_report->add_option("--in", in_path)->required();
  cmd_report->add_option("--csv", csv_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_transport->parsed()) {
      tel::GridMeasure nu = tel::load_measure(nu_path);
      tel::GridMeasure mu = tel::load_measure(mu_path);
      tel::AlphaCost alpha = tel::make_builtin(cost_id);
      tel::TransportResult r = tel::transport_cost(nu, mu, tel::SeparableCost(alpha, 1));
      ordered_json j{{"cost", r.cost},
                     {"method", r.method == tel::TransportMethod::monotone ? "monotone" : "lp"}};
      write_output(j.dump(2) + "\n", out_path);
      return 0;
    }
    if (cmd_semigroup->parsed()) {
      tel::GridFunction f = tel::load_function_csv(f_path);
      tel::AlphaCost alpha = tel::make_builtin(cost_id);
      if (!(lambda > 0.0)) throw tel::ConfigError("semigroup: --lambda must be positive");
      tel::GridFunction g = op == "inf" ? tel::inf_convolution(f, lambda, alpha)
                                        : tel::sup_convolution(f, lambda, alpha);
      write_output(tel::function_csv(g), out_path);
      return 0;
    }
    if (cmd_certify->parsed()) {
      tel::GridFunction f = tel::load_function_csv(f_path);
      tel::AlphaCost alpha = tel::make_builtin(cost_id);
      tel::SemiConvexityCertificate cert = mode == "midpoint"
                                               ? tel::midpoint_defect(f, alpha)
                                               : tel::semiconvexity_defect(f, alpha);
      ordered_json j{{"K_min", cert.K_min},
                     {"witness", {{"x_index", cert.witness_x}, {"y_index", cert.witness_y}}},
                     {"mode", mode == "midpoint" ? "midpoint-form" : "gradient-form"},
                     {"witness_on_boundary", cert.witness_on_boundary},
                     {"cost", alpha.name},
                     {"grid", f.grid.spec()}};
      write_output(j.dump(2) + "\n", out_path);
      return 0;
    }
    if (cmd_verify->parsed()) {
      tel::GridMeasure mu = tel::load_measure(mu_path);
      tel::AlphaCost alpha = tel::make_builtin(cost_id);
      std::vector<tel::InequalityReport> reports;
      if (ineq == "perturb" && !phi_path.empty()) {
        tel::GridFunction phi = tel::load_function_csv(phi_path);
        reports = tel::perturbation_check(mu, C, phi, alpha, tel::TestFamily(seed), count);
      } else {
        reports = run_verify(ineq, mu, alpha, C, seed, lambda, K, eta, kappa, count, tol);
      }
      return finish_reports(reports, out_path, csv_path);
    }
    if (cmd_constants->parsed()) {
      ordered_json j;
      if (which == "supv") {
        tel::SupVResult r = tel::sup_v_functional();
        j = {{"v_star", r.v_star}, {"g_star", r.g_star}, {"inv_g_star", 1.0 / r.g_star}};
      } else if (which == "phimin") {
        if (!(lambda > 0.0)) throw tel::ConfigError("constants phimin: --lambda must be positive");
        tel::PhiMinResult a = tel::phi_min(lambda, C);
        tel::PhiMinResult n = tel::phi_min_numeric(lambda, C);
        j = {{"t_min", a.t_min},
             {"phi_min", a.phi_min},
             {"numeric", {{"t_min", n.t_min}, {"phi_min", n.phi_min}}}};
      } else if (which == "bli") {
        if (!(kappa > 0.0)) throw tel::ConfigError("constants bli: --kappa must be positive");
        j = {{"kappa", kappa}, {"C", C}, {"K", tel::bli_constant(kappa, C)}};
      } else {
        j = {{"t", t_param},
             {"eta", eta_param},
             {"v", v_param},
             {"ell", tel::ell(t_param, eta_param, v_param)},
             {"T_of_v", tel::T_of_v(v_param)},
             {"ell_at_T", tel::ell_at_T(eta_param, v_param)}};
      }
      write_output(j.dump(2) + "\n", out_path);
      return 0;
    }
    if (cmd_chain->parsed()) {
      tel::GridMeasure mu = tel::load_measure(mu_path);
      tel::AlphaCost alpha = tel::make_builtin(cost_id);
      tel::ChainReport rep = tel::run_chain(mu, alpha, C, seed);
      write_output(rep.to_json().dump(2) + "\n", out_path);
      return rep.all_pass ? 0 : 1;
    }
    if (cmd_report->parsed()) {
      std::ifstream in(in_path);
      if (!in) throw tel::ConfigError("cannot open '" + in_path + "'");
      nlohmann::json arr;
      in >> arr;
      if (!arr.is_array()) throw tel::ConfigError(in_path + ": expected a JSON report array");
      std::string csv = tel::InequalityReport::csv_header() + "\n";
      for (const auto& r : arr) {
        auto num = [&](const char* key) {
          if (!r.contains(key)) return std::string("");
          if (r[key].is_string()) return r[key].get<std::string>();
          char buf[40];
          std::snprintf(buf, sizeof(buf), "%.17g", r[key].get<double>());
          return std::string(buf);
        };
        csv += r.value("name", std::string("?")) + "," + num("constant") + "," + num("lhs") + "," +
               num("rhs") + "," + num("slack") + "," + (r.value("pass", false) ? "1" : "0") + "\n";
      }
      write_output(csv, csv_path.empty() ? out_path : csv_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
