#include "berndual/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "berndual/dual_basis.hpp"
#include "berndual/errors.hpp"
#include "berndual/numeric.hpp"

namespace berndual {

namespace {

// A defect this large means the outer-coefficient recurrence is broken, not
// that rounding caught up with us.
constexpr double kBoundarySanity = 1e-6;

double sign(int parity) { return parity % 2 == 0 ? 1.0 : -1.0; }

struct Step {
  BernsteinPoly poly;
  double residual;
};

Step advance(const BVProblem& problem, const BernsteinPoly& previous, int n,
             const QuadratureRule& rule) {
  const int m = problem.order();
  const int k = problem.left_count();
  const int l = problem.right_count();
  if (n < m) throw ArgumentError("iterate: need n >= m");
  if (previous.degree() != n - 1) {
    throw ArgumentError("iterate: previous iterate must have degree n - 1");
  }

  const OuterCoefficients outer = outer_coefficients(problem, n);
  const DualCoeffTable duals = dual_coefficients(n - m);
  const std::vector<BernsteinPoly> prev_derivs = derivatives(previous, m - 1);

  std::vector<double> samples;
  try {
    std::vector<double> args(m);
    samples = sample(
        [&](double x) {
          for (int r = 0; r < m; ++r) args[r] = eval(prev_derivs[r], x);
          return problem.rhs(x, args);
        },
        rule);
  } catch (const EvaluationError& e) {
    throw SolveError(n, SolveError::Cause::evaluation, e.what());
  }
  const std::vector<extended> moments = moments_from_samples(samples, n - m, rule);

  BandedToeplitz system = assemble_matrix(n, m, k, l);
  system.rhs = assemble_rhs(n, m, k, l, duals, moments, outer);
  std::vector<double> inner;
  try {
    inner = solve(system);
  } catch (const SingularSystemError& e) {
    throw SolveError(n, SolveError::Cause::singular_system, e.what());
  }

  std::vector<double> coeffs(n + 1);
  for (int i = 0; i < k; ++i) coeffs[i] = outer.left[i];
  for (int j = 0; j < l; ++j) coeffs[n - j] = outer.right[j];
  for (int i = 0; i <= n - m; ++i) coeffs[k + i] = inner[i];

  BernsteinPoly w(std::move(coeffs));
  const double defect = boundary_defect(problem, w);
  if (!(defect <= kBoundarySanity)) {
    throw SolveError(n, SolveError::Cause::boundary_check,
                     "boundary conditions not reproduced (defect " + std::to_string(defect) + ")");
  }

  const BernsteinPoly top = derivative(w, m);
  double sq = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double d = eval(top, rule.nodes[q]) - samples[q];
    sq += rule.weights[q] * d * d;
  }
  return Step{std::move(w), std::sqrt(sq)};
}

}  // namespace

BVProblem::BVProblem(std::vector<double> left, std::vector<double> right, RhsFunction rhs)
    : left_(std::move(left)), right_(std::move(right)), rhs_(std::move(rhs)) {
  if (left_.empty() && right_.empty()) {
    throw ArgumentError("BVProblem: order must be at least 1");
  }
  for (double v : left_) {
    if (!std::isfinite(v)) throw ArgumentError("BVProblem: non-finite left boundary value");
  }
  for (double v : right_) {
    if (!std::isfinite(v)) throw ArgumentError("BVProblem: non-finite right boundary value");
  }
  if (!rhs_) throw ArgumentError("BVProblem: missing right-hand side");
}

BVProblem BVProblem::from_expression(std::vector<double> left, std::vector<double> right,
                                     const Expr& rhs) {
  const int m = static_cast<int>(left.size() + right.size());
  if (rhs.max_variable_index() >= m) {
    throw ArgumentError("right-hand side uses y" + std::to_string(rhs.max_variable_index()) +
                        " but the equation has order " + std::to_string(m));
  }
  return BVProblem(std::move(left), std::move(right),
                   [rhs](double x, std::span<const double> d) { return rhs.evaluate(x, d); });
}

OuterCoefficients outer_coefficients(const BVProblem& problem, int n) {
  const int k = problem.left_count();
  const int l = problem.right_count();
  if (n < problem.order() - 1) {
    throw ArgumentError("outer_coefficients: need n >= m - 1");
  }
  const auto a = problem.left_values();
  const auto b = problem.right_values();

  // left[i] = (n-i)!/n! a_i - sum_{h<i} (-1)^(i-h) C(i,h) left[h]
  OuterCoefficients out;
  out.left.resize(k);
  std::vector<double> terms;
  std::vector<double> weights;
  for (int i = 0; i < k; ++i) {
    terms.assign(1, a[i] / falling_factorial(n, i));
    weights.assign(1, 1.0);
    for (int h = 0; h < i; ++h) {
      terms.push_back(out.left[h]);
      weights.push_back(-sign(i - h) * binomial(i, h));
    }
    out.left[i] = accurate_dot(weights, terms);
  }

  // right[j] = p_{n-j} = (-1)^j (n-j)!/n! b_j - sum_{h=1..j} (-1)^h C(j,h) right[j-h]
  out.right.resize(l);
  for (int j = 0; j < l; ++j) {
    terms.assign(1, sign(j) * b[j] / falling_factorial(n, j));
    weights.assign(1, 1.0);
    for (int h = 1; h <= j; ++h) {
      terms.push_back(out.right[j - h]);
      weights.push_back(-sign(h) * binomial(j, h));
    }
    out.right[j] = accurate_dot(weights, terms);
  }
  return out;
}

BernsteinPoly seed(const BVProblem& problem) {
  const int m = problem.order();
  const OuterCoefficients outer = outer_coefficients(problem, m - 1);
  std::vector<double> coeffs(m);
  for (int i = 0; i < problem.left_count(); ++i) coeffs[i] = outer.left[i];
  for (int j = 0; j < problem.right_count(); ++j) coeffs[m - 1 - j] = outer.right[j];
  return BernsteinPoly(std::move(coeffs));
}

double boundary_defect(const BVProblem& problem, const BernsteinPoly& w) {
  double worst = 0.0;
  const auto a = problem.left_values();
  const auto b = problem.right_values();
  for (int i = 0; i < problem.left_count(); ++i) {
    const double got = endpoint_derivative(w, i, End::left);
    worst = std::max(worst, std::abs(got - a[i]) / (1.0 + std::abs(a[i])));
  }
  for (int j = 0; j < problem.right_count(); ++j) {
    const double got = endpoint_derivative(w, j, End::right);
    worst = std::max(worst, std::abs(got - b[j]) / (1.0 + std::abs(b[j])));
  }
  return worst;
}

QuadratureRule iteration_rule(const SolveOptions& options, int n) {
  return gauss_rule(options.quad_order.value_or(std::max(n + 2, 20)),
                    options.quad_panels.value_or(2));
}

BernsteinPoly iterate(const BVProblem& problem, const BernsteinPoly& previous, int n,
                      const QuadratureRule& rule) {
  return advance(problem, previous, n, rule).poly;
}

SolveReport solve(const BVProblem& problem, const SolveOptions& options) {
  const int m = problem.order();
  if (options.degree < m) {
    throw ArgumentError("solve: target degree " + std::to_string(options.degree) +
                        " is below the equation order " + std::to_string(m));
  }
  if ((options.quad_order && *options.quad_order < 1) ||
      (options.quad_panels && *options.quad_panels < 1)) {
    throw ArgumentError("solve: quadrature order and panels must be >= 1");
  }

  SolveReport report;
  BernsteinPoly w = seed(problem);
  if (options.record_diagnostics) {
    report.iterates.push_back(w);
    report.boundary_defects.push_back(boundary_defect(problem, w));
  }
  for (int n = m; n <= options.degree; ++n) {
    Step step = advance(problem, w, n, iteration_rule(options, n));
    w = std::move(step.poly);
    if (options.record_diagnostics) {
      report.iterates.push_back(w);
      report.residuals.push_back(step.residual);
      report.boundary_defects.push_back(boundary_defect(problem, w));
    }
  }
  report.solution = std::move(w);
  return report;
}

}  // namespace berndual
