#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "berndual/band_solver.hpp"
#include "berndual/bernstein.hpp"
#include "berndual/expr.hpp"
#include "berndual/quadrature.hpp"

namespace berndual {

/// f(x, y, y', ..., y^(m-1)); `derivs` has exactly m entries.
using RhsFunction = std::function<double(double x, std::span<const double> derivs)>;

/// y^(m)(x) = f(x, y, ..., y^(m-1)) on [0, 1] with
///   y^(i)(0) = left[i]  (i < k),   y^(j)(1) = right[j]  (j < l),   k + l = m.
class BVProblem {
public:
  /// Throws ArgumentError if k + l = 0, a boundary value is not finite, or
  /// rhs is empty.
  BVProblem(std::vector<double> left, std::vector<double> right, RhsFunction rhs);

  /// Binds a parsed expression; every yk it uses must have k < m.
  static BVProblem from_expression(std::vector<double> left, std::vector<double> right,
                                   const Expr& rhs);

  int order() const noexcept { return static_cast<int>(left_.size() + right_.size()); }
  int left_count() const noexcept { return static_cast<int>(left_.size()); }
  int right_count() const noexcept { return static_cast<int>(right_.size()); }
  std::span<const double> left_values() const noexcept { return left_; }
  std::span<const double> right_values() const noexcept { return right_; }
  double rhs(double x, std::span<const double> derivs) const { return rhs_(x, derivs); }

private:
  std::vector<double> left_;
  std::vector<double> right_;
  RhsFunction rhs_;
};

struct SolveOptions {
  int degree = 0;                  ///< target degree N >= m
  std::optional<int> quad_order;   ///< default max(n + 2, 20)
  std::optional<int> quad_panels;  ///< default 2
  bool record_diagnostics = false; ///< keep every iterate and per-step residuals
};

struct SolveReport {
  BernsteinPoly solution{std::vector<double>{0.0}};
  /// w_{m-1}, w_m, ..., w_N when diagnostics are recorded.
  std::vector<BernsteinPoly> iterates;
  /// ||w_n^(m) - f(., w_{n-1}, ...)|| for n = m..N, by quadrature.
  std::vector<double> residuals;
  /// max over boundary conditions of |w_n^(i)(end) - value| / (1 + |value|),
  /// for n = m-1..N.
  std::vector<double> boundary_defects;
};

/// Coefficients of w_n fixed by the boundary data. Needs n >= m - 1.
OuterCoefficients outer_coefficients(const BVProblem& problem, int n);

/// Degree m-1 polynomial determined by the boundary data alone.
BernsteinPoly seed(const BVProblem& problem);

/// Rule used when building the degree-n iterate under `options`.
QuadratureRule iteration_rule(const SolveOptions& options, int n);

/// One step: w_n from w_{n-1}. Outer coefficients from the boundary data,
/// inner ones from the banded Toeplitz system whose right-hand side projects
/// f(., w_{n-1}, ..., w_{n-1}^(m-1)) onto the dual basis. Failures are
/// rethrown as SolveError labelled with n.
BernsteinPoly iterate(const BVProblem& problem, const BernsteinPoly& previous, int n,
                      const QuadratureRule& rule);

/// Seed, then iterate for n = m..N. Deterministic.
SolveReport solve(const BVProblem& problem, const SolveOptions& options);

/// Largest relative boundary defect of w (see SolveReport::boundary_defects).
double boundary_defect(const BVProblem& problem, const BernsteinPoly& w);

}  // namespace berndual
