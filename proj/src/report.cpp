#include "tel/report.hpp"

#include <cmath>
#include <cstdio>

#include "tel/semigroup.hpp"

namespace tel {

namespace {
std::string fmt(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

nlohmann::ordered_json num_or_string(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : "-inf";
}
}  // namespace

InequalityReport make_report(const std::string& name, double constant, double lhs, double rhs,
                             double tol, const std::string& witness) {
  InequalityReport r;
  r.name = name;
  r.constant = constant;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.witness = witness;
  if (rhs == kInf) {
    r.slack = kInf;
    r.pass = true;
    r.flags.push_back("rhs-infinite");
  } else {
    r.slack = rhs - lhs;
    r.pass = r.slack >= -tol;
  }
  return r;
}

nlohmann::ordered_json InequalityReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["constant"] = constant;
  j["lhs"] = num_or_string(lhs);
  j["rhs"] = num_or_string(rhs);
  j["slack"] = num_or_string(slack);
  j["tol"] = tol;
  j["pass"] = pass;
  j["witness"] = witness;
  j["flags"] = flags;
  j["diagnostics"] = {{"boundary_mass", boundary_mass}, {"grid", grid_spec}};
  return j;
}

std::string InequalityReport::csv_header() { return "name,constant,lhs,rhs,slack,pass"; }

std::string InequalityReport::csv_row() const {
  return name + "," + fmt(constant) + "," + fmt(lhs) + "," + fmt(rhs) + "," + fmt(slack) + "," +
         (pass ? "1" : "0");
}

double default_tol(const GridFunction& f) {
  double lip = lipschitz_constant(f);
  double kappa = 10.0 * (1.0 + lip) * (1.0 + lip);
  return std::max(1e-9, kappa * f.grid.spacing());
}

bool all_pass(const std::vector<InequalityReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace tel
