#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tel/grid.hpp"
#include "tel/report.hpp"

namespace tel {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Measure spec: {"grid": {"lo", "hi", "n"}, "density": {"kind", "params"}}.
// kinds: gaussian {mean, sigma}, exp_power {p}, uniform {}.
// Unknown keys are rejected with the offending path.
GridMeasure measure_from_json(const nlohmann::json& spec, const std::string& path = "measure");
GridMeasure load_measure(const std::string& filename);

// CSV of "x,value" lines
GridFunction load_function_csv(const std::string& filename);
void save_function_csv(const GridFunction& f, const std::string& filename);
void save_measure_csv(const GridMeasure& mu, const std::string& filename);
std::string function_csv(const GridFunction& f);

// JSON array plus CSV summary; returns true iff every report passes.
bool emit_report(const std::vector<InequalityReport>& reports, std::ostream& json_out);
std::string reports_csv(const std::vector<InequalityReport>& reports);

}  // namespace tel
