#pragma once

// Brute-force checks of the solver shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "berndual/bernstein.hpp"
#include "berndual/bvp.hpp"
#include "oracles.hpp"

namespace checks {

/// f(x, y) = c0 + c1 x + sum_r alpha_r y_r.
struct LinearRhs {
  double c0 = 0.0;
  double c1 = 0.0;
  std::vector<double> alpha;

  double operator()(double x, std::span<const double> d) const {
    double v = c0 + c1 * x;
    for (std::size_t r = 0; r < alpha.size(); ++r) v += alpha[r] * d[r];
    return v;
  }
};

struct OptimalityCase {
  berndual::BVProblem problem;
  berndual::BernsteinPoly previous;
  LinearRhs rhs;
  int n;
};

inline OptimalityCase random_optimality_case(std::mt19937_64& rng, int m, int k, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> left(k), right(m - k);
  for (double& v : left) v = u(rng);
  for (double& v : right) v = u(rng);
  LinearRhs f{u(rng), u(rng), std::vector<double>(m)};
  for (double& a : f.alpha) a = u(rng);
  berndual::BVProblem problem(left, right, f);

  // Previous iterate: random inner part, outer part fixed by the boundary data.
  std::vector<double> prev(n);
  for (double& v : prev) v = u(rng);
  const auto outer = berndual::outer_coefficients(problem, n - 1);
  for (int i = 0; i < k; ++i) prev[i] = outer.left[i];
  for (int j = 0; j < m - k; ++j) prev[n - 1 - j] = outer.right[j];
  return {problem, berndual::BernsteinPoly(prev), f, n};
}

/// Inner coefficients minimizing ||w^(m) - g||_2 with the outer coefficients
/// fixed, where g = f(., previous, ..., previous^(m-1)). Dense normal
/// equations in the power basis, exact Gauss integration.
inline std::vector<double> normal_equations_inner(const OptimalityCase& c) {
  const int m = c.problem.order();
  const int k = c.problem.left_count();
  const int l = c.problem.right_count();
  const int n = c.n;
  const auto outer = berndual::outer_coefficients(c.problem, n);

  auto basis_mth = [&](int i) {
    std::vector<double> e(n + 1, 0.0);
    e[i] = 1.0;
    return oracle::monomial_derivative(oracle::bernstein_to_monomial(e), m);
  };
  std::vector<double> fixed(n + 1, 0.0);
  for (int i = 0; i < k; ++i) fixed[i] = outer.left[i];
  for (int j = 0; j < l; ++j) fixed[n - j] = outer.right[j];
  const auto outer_mth = oracle::monomial_derivative(oracle::bernstein_to_monomial(fixed), m);

  const auto prev_mono = oracle::bernstein_to_monomial(
      std::vector<double>(c.previous.coeffs().begin(), c.previous.coeffs().end()));
  std::vector<std::vector<double>> prev_derivs;
  for (int r = 0; r < m; ++r) prev_derivs.push_back(oracle::monomial_derivative(prev_mono, r));

  const auto rule = oracle::legendre_rule(n + 4);
  const int s = n - m + 1;
  std::vector<std::vector<double>> phi(s);
  for (int i = 0; i < s; ++i) phi[i] = basis_mth(k + i);

  std::vector<std::vector<double>> gram(s, std::vector<double>(s, 0.0));
  std::vector<double> rhs(s, 0.0);
  for (std::size_t q = 0; q < rule.x.size(); ++q) {
    const double x = rule.x[q];
    std::vector<double> d(m);
    for (int r = 0; r < m; ++r) d[r] = oracle::horner(prev_derivs[r], x);
    const double target = c.rhs(x, d) - oracle::horner(outer_mth, x);
    std::vector<double> values(s);
    for (int i = 0; i < s; ++i) values[i] = oracle::horner(phi[i], x);
    for (int i = 0; i < s; ++i) {
      rhs[i] += rule.w[q] * values[i] * target;
      for (int j = 0; j < s; ++j) gram[i][j] += rule.w[q] * values[i] * values[j];
    }
  }
  return oracle::dense_solve(gram, rhs);
}

/// Relative max-norm gap between the Toeplitz-path inner coefficients and the
/// normal-equation ones.
inline double optimality_gap(const OptimalityCase& c) {
  const int k = c.problem.left_count();
  const auto w = berndual::iterate(c.problem, c.previous, c.n, berndual::default_rule(c.n));
  const auto ref = normal_equations_inner(c);
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    diff = std::max(diff, std::abs(w[k + i] - ref[i]));
    scale = std::max(scale, std::abs(ref[i]));
  }
  return diff / std::max(scale, 1e-300);
}

/// Random problem of order m with boundary values in [-1, 1] and a smooth
/// rhs that stays finite for any arguments.
inline berndual::BVProblem random_synthetic_problem(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int k = static_cast<int>(rng() % (m + 1));
  std::vector<double> left(k), right(m - k);
  for (double& v : left) v = u(rng);
  for (double& v : right) v = u(rng);
  std::vector<double> alpha(m);
  for (double& a : alpha) a = 0.5 * u(rng);
  const double c = u(rng);
  return berndual::BVProblem(left, right, [alpha, c](double x, std::span<const double> d) {
    double v = c * std::cos(3.0 * x);
    for (std::size_t r = 0; r < alpha.size(); ++r) v += alpha[r] * std::sin(d[r]);
    return v;
  });
}

}  // namespace checks
