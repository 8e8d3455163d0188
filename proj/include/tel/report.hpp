#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tel/grid.hpp"
#include "tel/numeric.hpp"

namespace tel {

// One inequality instance: constant, both sides, slack, pass.
// Invariant: pass <=> slack >= -tol; an infinite rhs auto-passes with a flag.
struct InequalityReport {
  std::string name;
  double constant = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double tol = 0.0;
  bool pass = false;
  std::string witness;
  std::vector<std::string> flags;
  double boundary_mass = 0.0;  // truncation diagnostic
  std::string grid_spec;

  nlohmann::ordered_json to_json() const;
  std::string csv_row() const;
  static std::string csv_header();
};

InequalityReport make_report(const std::string& name, double constant, double lhs, double rhs,
                             double tol, const std::string& witness);

// tol = max(1e-9, 10 (1 + Lip f)^2 h): explicit discretization budget
double default_tol(const GridFunction& f);

bool all_pass(const std::vector<InequalityReport>& reports);

}  // namespace tel
