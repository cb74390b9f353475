#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berndual/bvp.hpp"
#include "berndual/expr.hpp"

namespace berndual::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3 };

/// Problem description read from JSON:
///   { "order": 2, "left": [0], "right": [0], "rhs": "y1^2 + 1",
///     "exact": "...", "quadrature": { "order": 24, "panels": 2 } }
/// "exact" and "quadrature" are optional.
struct ProblemSpec {
  int order = 0;
  std::vector<double> left;
  std::vector<double> right;
  std::string rhs_source;
  Expr rhs = parse("0");
  std::optional<std::string> exact_source;
  std::optional<Expr> exact;
  std::optional<int> quad_order;
  std::optional<int> quad_panels;

  BVProblem problem() const;
};

/// Throws ArgumentError / ParseError on invalid content.
ProblemSpec parse_problem_spec(std::string_view json_text);
ProblemSpec load_problem_spec(const std::filesystem::path& path);

/// Coefficient document written by `solve`:
///   { "degree": N, "coefficients": [...], "residuals": [...], "options": {...} }
/// Numbers are printed with 17 significant digits.
std::string coefficient_json(const SolveReport& report, const SolveOptions& options);
BernsteinPoly parse_coefficient_json(std::string_view json_text);

/// "%.2e" formatting used for table cells.
std::string format_sci3(double v);

/// Entry point shared by the executable and the tests. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace berndual::cli
