#include "tel/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tel {

namespace {

void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                         const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path + ": expected a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) {
      std::string valid;
      for (const char* k : allowed) valid += std::string(valid.empty() ? "" : ", ") + k;
      throw ConfigError(path + "." + it.key() + ": unknown key; expected one of {" + valid + "}");
    }
  }
}

double require_number(const nlohmann::json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) throw ConfigError(path + "." + key + ": missing");
  if (!obj[key].is_number()) throw ConfigError(path + "." + key + ": expected a number");
  return obj[key].get<double>();
}

}  // namespace

GridMeasure measure_from_json(const nlohmann::json& spec, const std::string& path) {
  reject_unknown_keys(spec, {"grid", "density"}, path);
  if (!spec.contains("grid")) throw ConfigError(path + ".grid: missing");
  if (!spec.contains("density")) throw ConfigError(path + ".density: missing");
  const auto& g = spec["grid"];
  reject_unknown_keys(g, {"lo", "hi", "n"}, path + ".grid");
  double lo = require_number(g, "lo", path + ".grid");
  double hi = require_number(g, "hi", path + ".grid");
  double nd = require_number(g, "n", path + ".grid");
  int n = static_cast<int>(nd);
  if (n != nd) throw ConfigError(path + ".grid.n: expected an integer");
  Grid1D grid(lo, hi, n);

  const auto& d = spec["density"];
  reject_unknown_keys(d, {"kind", "params"}, path + ".density");
  if (!d.contains("kind") || !d["kind"].is_string())
    throw ConfigError(path + ".density.kind: missing or not a string");
  std::string kind = d["kind"].get<std::string>();
  nlohmann::json params = d.contains("params") ? d["params"] : nlohmann::json::object();
  if (kind == "gaussian") {
    reject_unknown_keys(params, {"mean", "sigma"}, path + ".density.params");
    double mean = params.contains("mean") ? require_number(params, "mean", path) : 0.0;
    double sigma = params.contains("sigma") ? require_number(params, "sigma", path) : 1.0;
    return discretize_gaussian(grid, mean, sigma);
  }
  if (kind == "exp_power") {
    reject_unknown_keys(params, {"p"}, path + ".density.params");
    double p = require_number(params, "p", path + ".density.params");
    return discretize_exp_power(grid, p);
  }
  if (kind == "uniform") {
    reject_unknown_keys(params, {}, path + ".density.params");
    return discretize(grid, [](double) { return 1.0; });
  }
  throw ConfigError(path + ".density.kind: unknown kind '" + kind +
                    "'; expected gaussian, exp_power or uniform");
}

GridMeasure load_measure(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ConfigError("cannot open measure file '" + filename + "'");
  nlohmann::json spec;
  try {
    in >> spec;
  } catch (const std::exception& e) {
    throw ConfigError("measure file '" + filename + "': " + e.what());
  }
  return measure_from_json(spec, filename);
}

GridFunction load_function_csv(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ConfigError("cannot open function file '" + filename + "'");
  std::vector<double> xs, vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double x, v;
    if (std::sscanf(line.c_str(), "%lf,%lf", &x, &v) != 2) {
      if (xs.empty()) continue;  // tolerate one header line
      throw ConfigError("function file '" + filename + "': bad line '" + line + "'");
    }
    xs.push_back(x);
    vs.push_back(v);
  }
  if (xs.size() < 3) throw ConfigError("function file '" + filename + "': need at least 3 rows");
  double h = xs[1] - xs[0];
  for (size_t i = 1; i < xs.size(); ++i)
    if (std::fabs(xs[i] - xs[i - 1] - h) > 1e-9 * (1.0 + std::fabs(h)))
      throw ConfigError("function file '" + filename + "': points are not uniformly spaced");
  Grid1D grid(xs.front(), xs.back(), static_cast<int>(xs.size()));
  return GridFunction(grid, std::move(vs));
}

std::string function_csv(const GridFunction& f) {
  std::string out;
  char buf[80];
  for (int i = 0; i < f.grid.n; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", f.grid.point(i), f.values[i]);
    out += buf;
  }
  return out;
}

void save_function_csv(const GridFunction& f, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw ConfigError("cannot write '" + filename + "'");
  out << function_csv(f);
}

void save_measure_csv(const GridMeasure& mu, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw ConfigError("cannot write '" + filename + "'");
  char buf[80];
  for (int i = 0; i < mu.grid.n; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", mu.grid.point(i), mu.weights[i]);
    out << buf;
  }
}

bool emit_report(const std::vector<InequalityReport>& reports, std::ostream& json_out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  json_out << arr.dump(2) << "\n";
  return all_pass(reports);
}

std::string reports_csv(const std::vector<InequalityReport>& reports) {
  std::string out = InequalityReport::csv_header() + "\n";
  for (const auto& r : reports) out += r.csv_row() + "\n";
  return out;
}

}  // namespace tel
