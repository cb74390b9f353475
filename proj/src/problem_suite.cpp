#include "berndual/problem_suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "berndual/errors.hpp"
#include "berndual/expr.hpp"

namespace berndual {

namespace detail {
extern const char* const kExample4Fixture;
extern const char* const kExample5Fixture;
}  // namespace detail

FixtureTable parse_fixture(std::string_view text) {
  FixtureTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      std::istringstream fields(line.substr(1));
      std::string tag, side;
      int index = -1;
      double value = 0.0;
      if (fields >> tag && tag == "bc") {
        if (!(fields >> side >> index >> value) || index < 0 ||
            (side != "left" && side != "right")) {
          throw ArgumentError("fixture line " + std::to_string(line_no) +
                              ": expected '# bc left|right <index> <value>'");
        }
        auto& dest = side == "left" ? table.left_bc : table.right_bc;
        if (index != static_cast<int>(dest.size())) {
          throw ArgumentError("fixture line " + std::to_string(line_no) +
                              ": boundary constants must be listed in derivative order");
        }
        dest.push_back(value);
      } else {
        table.comments.push_back(line.substr(std::min<std::size_t>(2, line.size())));
      }
      continue;
    }
    std::istringstream fields(line);
    double x = 0.0;
    double y = 0.0;
    std::string rest;
    if (!(fields >> x >> y) || (fields >> rest) || !std::isfinite(y)) {
      throw ArgumentError("fixture line " + std::to_string(line_no) + ": expected 'x y'");
    }
    table.xs.push_back(x);
    table.ys.push_back(y);
  }
  if (table.xs.size() != FixtureTable::kGrid + 1) {
    throw ArgumentError("fixture: expected " + std::to_string(FixtureTable::kGrid + 1) +
                        " data lines, found " + std::to_string(table.xs.size()));
  }
  for (int i = 0; i <= FixtureTable::kGrid; ++i) {
    const double expected = static_cast<double>(i) / FixtureTable::kGrid;
    if (std::abs(table.xs[i] - expected) > 1e-9) {
      throw ArgumentError("fixture: abscissa " + std::to_string(i) + " is not " +
                          std::to_string(i) + "/200");
    }
    table.xs[i] = expected;
  }
  return table;
}

FixtureTable load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

ReferenceSolution ReferenceSolution::closed_form(std::function<double(double)> y) {
  if (!y) throw ArgumentError("ReferenceSolution: empty closed form");
  ReferenceSolution ref;
  ref.closed_ = std::move(y);
  return ref;
}

ReferenceSolution ReferenceSolution::fixture(FixtureTable table) {
  ReferenceSolution ref;
  ref.table_ = std::move(table);
  return ref;
}

double ReferenceSolution::operator()(double x) const {
  if (!closed_) throw ArgumentError("reference is tabulated; no closed form");
  return closed_(x);
}

const FixtureTable& ReferenceSolution::table() const {
  if (closed_) throw ArgumentError("reference is a closed form; no table");
  return table_;
}

namespace {

std::function<double(double)> from_expression(const std::string& source) {
  const Expr e = parse(source);
  return [e](double x) { return e.evaluate(x, {}); };
}

ExampleProblem make_example(int id) {
  switch (id) {
    case 1: {
      const std::string rhs = "y1^2 + 1";
      // -ln(cos(x - 1/2) / cos(1/2)) rewritten around the ratio minus one,
      // which vanishes at both ends.
      auto exact = [](double x) {
        const double ratio_minus_one =
            -2.0 * std::sin(0.5 * x) * std::sin(0.5 * (1.0 - x)) / std::cos(x - 0.5);
        return std::log1p(ratio_minus_one);
      };
      return {1, "y'' = (y')^2 + 1, y(0) = 0, y(1) = 0", rhs,
              BVProblem::from_expression({0.0}, {0.0}, parse(rhs)),
              ReferenceSolution::closed_form(exact)};
    }
    case 2: {
      const std::string rhs = "-2*y2 - y0";
      return {2, "y'''' = -2 y'' - y, y(0) = 3, y'(0) = 3, y(1) = 0, y'(1) = 0", rhs,
              BVProblem::from_expression({3.0, 3.0}, {0.0, 0.0}, parse(rhs)),
              ReferenceSolution::closed_form(from_expression(
                  "1.5*sec(1)^2*((4 - 3*x)*sin(x) - x*sin(2 - x) - (3*x - 1)*cos(x)"
                  " + (x + 1)*cos(2 - x))"))};
    }
    case 3: {
      const std::string rhs = "y3^2 / y2";
      return {3, "y'''' = (y''')^2 / y'', y(0) = 2, y'(0) = -1, y''(0) = 3, y'''(0) = 1",
              rhs, BVProblem::from_expression({2.0, -1.0, 3.0, 1.0}, {}, parse(rhs)),
              ReferenceSolution::closed_form(from_expression("-25 - 10*x + 27*exp(x/3)"))};
    }
    case 4: {
      const std::string rhs = "4*x*y1 + 2*y0";
      return {4, "y''' = 4 x y' + 2 y, y(0) = 1, y'(0) = 0, y(1) = 0 (Airy-type solution)",
              rhs, BVProblem::from_expression({1.0, 0.0}, {0.0}, parse(rhs)),
              ReferenceSolution::fixture(parse_fixture(detail::kExample4Fixture))};
    }
    case 5: {
      const std::string rhs = "-(x + 2)^2*y0";
      FixtureTable table = parse_fixture(detail::kExample5Fixture);
      if (table.left_bc.size() != 2 || !table.right_bc.empty()) {
        throw std::logic_error("example 5 fixture must carry y(0) and y'(0)");
      }
      std::vector<double> left = table.left_bc;
      return {5, "y'' = -(x + 2)^2 y, y(0), y'(0) from the Bessel-type solution", rhs,
              BVProblem::from_expression(std::move(left), {}, parse(rhs)),
              ReferenceSolution::fixture(std::move(table))};
    }
    default:
      throw ArgumentError("unknown example id " + std::to_string(id) + " (expected 1..5)");
  }
}

}  // namespace

const ExampleProblem& example(int id) {
  if (id < 1 || id > 5) {
    throw ArgumentError("unknown example id " + std::to_string(id) + " (expected 1..5)");
  }
  static const std::array<ExampleProblem, 5> examples{
      make_example(1), make_example(2), make_example(3), make_example(4), make_example(5)};
  return examples[id - 1];
}

std::vector<ErrorPoint> error_curve(const BernsteinPoly& w, const ReferenceSolution& ref,
                                    int grid) {
  if (grid < 1) throw ArgumentError("error_curve: grid must be >= 1");
  int stride = 0;
  if (ref.is_fixture()) {
    if (FixtureTable::kGrid % grid != 0) {
      throw ArgumentError("error_curve: tabulated reference needs a grid dividing 200, got " +
                          std::to_string(grid));
    }
    stride = FixtureTable::kGrid / grid;
  }
  std::vector<ErrorPoint> curve;
  curve.reserve(grid + 1);
  for (int i = 0; i <= grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    const double y = ref.is_fixture() ? ref.table().ys[i * stride] : ref(x);
    curve.push_back({x, std::abs(y - eval(w, x))});
  }
  return curve;
}

double max_error(std::span<const ErrorPoint> curve) {
  if (curve.empty()) throw ArgumentError("max_error: empty curve");
  double worst = 0.0;
  for (const auto& p : curve) worst = std::max(worst, p.error);
  return worst;
}

}  // namespace berndual
