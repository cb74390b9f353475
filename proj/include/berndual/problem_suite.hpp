#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "berndual/bernstein.hpp"
#include "berndual/bvp.hpp"

namespace berndual {

/// Tabulated reference solution on the grid {0, 1/200, ..., 1}.
///
/// Text format: lines starting with '#' are comments, except
///   # bc left <i> <value>     y^(i)(0)
///   # bc right <j> <value>    y^(j)(1)
/// which carry boundary constants. Then 201 lines "x y".
struct FixtureTable {
  static constexpr int kGrid = 200;

  std::vector<std::string> comments;
  std::vector<double> left_bc;
  std::vector<double> right_bc;
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Throws ArgumentError on malformed text or a grid other than {i / 200}.
FixtureTable parse_fixture(std::string_view text);
FixtureTable load_fixture(const std::filesystem::path& path);

/// Exact solution: either a closed form or a fixture table.
class ReferenceSolution {
public:
  static ReferenceSolution closed_form(std::function<double(double)> y);
  static ReferenceSolution fixture(FixtureTable table);

  bool is_fixture() const noexcept { return !closed_; }
  /// Only for closed forms.
  double operator()(double x) const;
  /// Only for fixtures.
  const FixtureTable& table() const;

private:
  std::function<double(double)> closed_;
  FixtureTable table_;
};

struct ExampleProblem {
  int id;
  std::string description;
  std::string rhs_source;  ///< in the expression grammar
  BVProblem problem;
  ReferenceSolution reference;
};

/// Built-in test problems 1..5. Examples 4 and 5 (Airy and Bessel exact
/// solutions) use embedded fixture tables; example 5 also takes its boundary
/// values from the table header. Throws ArgumentError for other ids.
const ExampleProblem& example(int id);

struct ErrorPoint {
  double x;
  double error;
};

/// |y(x) - w(x)| on {0, 1/grid, ..., 1}. Fixture references need grid to
/// divide 200.
std::vector<ErrorPoint> error_curve(const BernsteinPoly& w, const ReferenceSolution& ref,
                                    int grid);

double max_error(std::span<const ErrorPoint> curve);

}  // namespace berndual
