#pragma once

#include <functional>
#include <span>
#include <vector>

#include "berndual/numeric.hpp"

namespace berndual {

/// Composite Gauss-Legendre rule on [0, 1]: `panels` equal subintervals with
/// an `order`-point rule on each. Nodes are strictly increasing.
struct QuadratureRule {
  int order = 0;
  int panels = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  /// sum_k w_k f(x_k)
  double integrate(const std::function<double(double)>& f) const;
};

/// Legendre roots by Newton iteration from Chebyshev-angle guesses. The
/// single-panel nodes for each order are computed once per process and
/// cached. Throws ArgumentError for order < 1 or panels < 1.
QuadratureRule gauss_rule(int order, int panels);

/// Default rule for building an iterate of degree n: order max(n + 2, 20),
/// two panels.
QuadratureRule default_rule(int n);

/// B_0^n(x) .. B_n^n(x) in O(n).
std::vector<double> basis_row(int n, double x);
/// Same, for the double x, in extended precision.
std::vector<extended> basis_row_extended(int n, double x);

/// I_q = <g, B_q^{n-m}> for q = 0..n-m, accumulated in extended precision.
struct MomentVector {
  int n = 0;
  int m = 0;
  std::vector<extended> values;

  double operator[](std::size_t q) const { return static_cast<double>(values[q]); }
  std::size_t size() const noexcept { return values.size(); }
};

/// g at every node of `rule`. A non-finite value, or an EvaluationError thrown
/// by g, surfaces as an EvaluationError carrying the node.
std::vector<double> sample(const std::function<double(double)>& g,
                           const QuadratureRule& rule);

/// Moments against B_q^degree from precomputed samples of g at the nodes.
/// Nodes, weights and samples are taken as exact; products and sums are
/// carried in extended precision.
std::vector<extended> moments_from_samples(std::span<const double> samples,
                                         int degree, const QuadratureRule& rule);

/// g is evaluated exactly once per node; cost O(nodes * (n - m)).
MomentVector moment_integrals(const std::function<double(double)>& g, int n,
                              int m, const QuadratureRule& rule);

}  // namespace berndual
