#include "berndual/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "berndual/errors.hpp"
#include "berndual/problem_suite.hpp"

namespace berndual::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << content;
  if (!out) throw ArgumentError("failed writing " + path.string());
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> number_list(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw ArgumentError(std::string("'") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) throw ArgumentError(std::string("'") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
}

std::string join_array(const std::vector<double>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += format17(values[i]);
  }
  return s + "]";
}

// Exact solution of a target, when it has one.
struct Target {
  BVProblem problem;
  std::optional<ReferenceSolution> reference;
  SolveOptions options;
};

Target target_from_spec(const ProblemSpec& spec) {
  Target t{spec.problem(), std::nullopt, {}};
  if (spec.exact) {
    const Expr e = *spec.exact;
    t.reference = ReferenceSolution::closed_form([e](double x) { return e.evaluate(x, {}); });
  }
  t.options.quad_order = spec.quad_order;
  t.options.quad_panels = spec.quad_panels;
  return t;
}

int cmd_solve(const std::string& spec_path, int degree, std::optional<int> quad_order,
              std::optional<int> quad_panels, const std::string& out_path,
              std::ostream& out) {
  const ProblemSpec spec = load_problem_spec(spec_path);
  Target target = target_from_spec(spec);
  if (quad_order) target.options.quad_order = quad_order;
  if (quad_panels) target.options.quad_panels = quad_panels;
  target.options.degree = degree;
  target.options.record_diagnostics = true;

  const SolveReport report = solve(target.problem, target.options);
  write_file(out_path, coefficient_json(report, target.options));

  out << "degree " << degree << "\n";
  out << "final residual " << format17(report.residuals.back()) << "\n";
  if (target.reference) {
    const auto curve = error_curve(report.solution, *target.reference, FixtureTable::kGrid);
    out << "max error E_" << degree << " = " << format_sci3(max_error(curve)) << "\n";
  }
  return kOk;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ArgumentError("bad example id '" + item + "'");
    }
    if (used != item.size()) throw ArgumentError("bad example id '" + item + "'");
    if (id < 1 || id > 5) throw ArgumentError("unknown example id " + item);
    ids.push_back(id);
  }
  if (ids.empty()) throw ArgumentError("no example ids given");
  return ids;
}

int cmd_table(const std::string& ids_text, int min_degree, int max_degree,
              const std::string& out_path, std::ostream& out) {
  const std::vector<int> ids = parse_id_list(ids_text);
  if (min_degree < 1 || max_degree > 60 || min_degree > max_degree) {
    throw ArgumentError("degrees must satisfy 1 <= min-degree <= max-degree <= 60");
  }
  // One solve per example up to max_degree yields every intermediate iterate.
  std::map<int, std::vector<double>> errors;  // id -> E_n indexed by n
  for (int id : ids) {
    const ExampleProblem& ex = example(id);
    const int m = ex.problem.order();
    std::vector<double> row(max_degree + 1, std::nan(""));
    if (max_degree >= m) {
      SolveOptions options;
      options.degree = max_degree;
      options.record_diagnostics = true;
      const SolveReport report = solve(ex.problem, options);
      for (const BernsteinPoly& w : report.iterates) {
        if (w.degree() >= m) {
          row[w.degree()] = max_error(error_curve(w, ex.reference, FixtureTable::kGrid));
        }
      }
    }
    errors[id] = std::move(row);
  }

  std::string csv = "n";
  for (int id : ids) csv += ",example" + std::to_string(id);
  csv += "\n";
  for (int n = min_degree; n <= max_degree; ++n) {
    csv += std::to_string(n);
    for (int id : ids) {
      csv += ",";
      const double e = errors[id][n];
      if (!std::isnan(e)) csv += format_sci3(e);
    }
    csv += "\n";
  }
  if (out_path.empty()) {
    out << csv;
  } else {
    write_file(out_path, csv);
  }
  return kOk;
}

int cmd_error_curve(std::optional<int> example_id, const std::string& spec_path, int degree,
                    int grid, const std::string& out_path, std::ostream& out) {
  if (example_id.has_value() == !spec_path.empty()) {
    throw ArgumentError("give exactly one of --example or --spec");
  }
  if (grid < 1) throw ArgumentError("--grid must be >= 1");

  std::optional<Target> target;
  if (example_id) {
    const ExampleProblem& ex = example(*example_id);
    target = Target{ex.problem, ex.reference, {}};
  } else {
    target = target_from_spec(load_problem_spec(spec_path));
  }
  if (!target->reference) throw ArgumentError("no exact solution available for this target");
  if (target->reference->is_fixture() && FixtureTable::kGrid % grid != 0) {
    throw ArgumentError("tabulated reference needs a grid dividing 200");
  }
  target->options.degree = degree;
  const SolveReport report = solve(target->problem, target->options);
  const auto curve = error_curve(report.solution, *target->reference, grid);

  std::string csv = "x,epsilon\n";
  for (const auto& p : curve) csv += format17(p.x) + "," + format17(p.error) + "\n";
  if (out_path.empty()) {
    out << csv;
  } else {
    write_file(out_path, csv);
  }
  return kOk;
}

int cmd_eval(const std::string& coeffs_path, double x, std::ostream& out) {
  if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("--at must lie in [0, 1]");
  const BernsteinPoly w = parse_coefficient_json(read_file(coeffs_path));
  out << format17(eval(w, x)) << "\n";
  return kOk;
}

}  // namespace

BVProblem ProblemSpec::problem() const { return BVProblem::from_expression(left, right, rhs); }

ProblemSpec parse_problem_spec(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ArgumentError("problem spec must be a JSON object");
  ProblemSpec spec;
  if (!doc.contains("order") || !doc.at("order").is_number_integer()) {
    throw ArgumentError("problem spec needs an integer 'order'");
  }
  spec.order = doc.at("order").get<int>();
  if (spec.order < 1) throw ArgumentError("'order' must be >= 1");
  spec.left = number_list(doc, "left");
  spec.right = number_list(doc, "right");
  if (static_cast<int>(spec.left.size() + spec.right.size()) != spec.order) {
    throw ArgumentError("boundary condition count mismatch: " +
                        std::to_string(spec.left.size()) + " left + " +
                        std::to_string(spec.right.size()) + " right != order " +
                        std::to_string(spec.order));
  }
  if (!doc.contains("rhs") || !doc.at("rhs").is_string()) {
    throw ArgumentError("problem spec needs a string 'rhs'");
  }
  spec.rhs_source = doc.at("rhs").get<std::string>();
  spec.rhs = parse(spec.rhs_source);
  if (spec.rhs.max_variable_index() >= spec.order) {
    throw ArgumentError("rhs uses y" + std::to_string(spec.rhs.max_variable_index()) +
                        " but order is " + std::to_string(spec.order));
  }
  if (doc.contains("exact")) {
    if (!doc.at("exact").is_string()) throw ArgumentError("'exact' must be a string");
    spec.exact_source = doc.at("exact").get<std::string>();
    spec.exact = parse(*spec.exact_source);
    if (spec.exact->max_variable_index() >= 0) {
      throw ArgumentError("'exact' may only use x");
    }
  }
  if (doc.contains("quadrature")) {
    const json& q = doc.at("quadrature");
    if (!q.is_object()) throw ArgumentError("'quadrature' must be an object");
    for (const char* key : {"order", "panels"}) {
      if (!q.contains(key)) continue;
      if (!q.at(key).is_number_integer() || q.at(key).get<int>() < 1) {
        throw ArgumentError(std::string("quadrature '") + key + "' must be a positive integer");
      }
      (std::string(key) == "order" ? spec.quad_order : spec.quad_panels) = q.at(key).get<int>();
    }
  }
  return spec;
}

ProblemSpec load_problem_spec(const std::filesystem::path& path) {
  return parse_problem_spec(read_file(path));
}

std::string coefficient_json(const SolveReport& report, const SolveOptions& options) {
  const auto c = report.solution.coeffs();
  std::string s = "{\n";
  s += "  \"degree\": " + std::to_string(report.solution.degree()) + ",\n";
  s += "  \"coefficients\": " + join_array({c.begin(), c.end()}) + ",\n";
  s += "  \"residuals\": " + join_array(report.residuals) + ",\n";
  s += "  \"options\": {\"quad_order\": " +
       (options.quad_order ? std::to_string(*options.quad_order) : std::string("null")) +
       ", \"quad_panels\": " +
       (options.quad_panels ? std::to_string(*options.quad_panels) : std::string("null")) +
       "}\n";
  s += "}\n";
  return s;
}

BernsteinPoly parse_coefficient_json(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object() || !doc.contains("coefficients")) {
    throw ArgumentError("coefficient file needs a 'coefficients' array");
  }
  std::vector<double> coeffs = number_list(doc, "coefficients");
  if (coeffs.empty()) throw ArgumentError("empty 'coefficients'");
  if (doc.contains("degree") &&
      (!doc.at("degree").is_number_integer() ||
       doc.at("degree").get<long long>() + 1 != static_cast<long long>(coeffs.size()))) {
    throw ArgumentError("'degree' does not match the number of coefficients");
  }
  return BernsteinPoly(std::move(coeffs));
}

std::string format_sci3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernstein / dual Bernstein least-squares solver for two-point BVPs on [0, 1]",
               "berndual"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  int degree = 0;
  std::optional<int> quad_order;
  std::optional<int> quad_panels;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem spec, write coefficients");
  solve_cmd->add_option("spec", spec_path, "Problem spec (JSON)")->required();
  solve_cmd->add_option("--degree,-N", degree, "Target degree N")->required();
  solve_cmd->add_option("--quad-order", quad_order, "Gauss points per panel");
  solve_cmd->add_option("--quad-panels", quad_panels, "Number of panels");
  solve_cmd->add_option("--out,-o", out_path, "Coefficient JSON output")->required();

  std::string ids = "1,2,3,4,5";
  int min_degree = 2;
  int max_degree = 20;
  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "Max errors E_n of the built-in examples");
  table_cmd->add_option("--examples", ids, "Comma-separated example ids");
  table_cmd->add_option("--min-degree", min_degree);
  table_cmd->add_option("--max-degree", max_degree);
  table_cmd->add_option("--out,-o", table_out, "CSV output (default stdout)");

  std::optional<int> curve_example;
  std::string curve_spec;
  int curve_degree = 0;
  int grid = 200;
  std::string curve_out;
  auto* curve_cmd = app.add_subcommand("error-curve", "Pointwise error |y - w_n| on a grid");
  curve_cmd->add_option("--example", curve_example, "Built-in example id");
  curve_cmd->add_option("--spec", curve_spec, "Problem spec with an 'exact' expression");
  curve_cmd->add_option("--degree,-n", curve_degree)->required();
  curve_cmd->add_option("--grid,-M", grid, "Grid size M (M+1 points)");
  curve_cmd->add_option("--out,-o", curve_out, "CSV output (default stdout)");

  std::string coeffs_path;
  double at = 0.0;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a coefficient file");
  eval_cmd->add_option("--coeffs", coeffs_path)->required();
  eval_cmd->add_option("--at", at)->required();

  std::vector<const char*> argv;
  argv.push_back("berndual");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(spec_path, degree, quad_order, quad_panels, out_path, out);
    if (*table_cmd) return cmd_table(ids, min_degree, max_degree, table_out, out);
    if (*curve_cmd) {
      return cmd_error_curve(curve_example, curve_spec, curve_degree, grid, curve_out, out);
    }
    if (*eval_cmd) return cmd_eval(coeffs_path, at, out);
  } catch (const SolveError& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

}  // namespace berndual::cli
