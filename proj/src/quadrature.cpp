#include "berndual/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "berndual/errors.hpp"
#include "berndual/numeric.hpp"

namespace berndual {

namespace {

struct UnitRule {
  std::vector<double> nodes;    // ascending, in (0, 1)
  std::vector<double> weights;  // sum to 1
};

// P_order(z) and P'_order(z) by the three-term recurrence.
void legendre(int order, double z, double& value, double& slope) {
  double p0 = 1.0;
  double p1 = z;
  for (int j = 2; j <= order; ++j) {
    const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  value = p1;
  slope = order * (z * p1 - p0) / (z * z - 1.0);
}

UnitRule compute_unit_rule(int order) {
  UnitRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double value = 0.0;
    double slope = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100 && !converged; ++iter) {
      legendre(order, z, value, slope);
      const double dz = value / slope;
      z -= dz;
      converged = std::abs(dz) <= 1e-15;
    }
    if (!converged) {
      throw std::runtime_error("gauss_rule: Newton iteration did not converge for order " +
                               std::to_string(order));
    }
    legendre(order, z, value, slope);
    const double w = 2.0 / ((1.0 - z * z) * slope * slope);
    // z decreases with i; map [-1, 1] onto [0, 1] filling from both ends.
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[order - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = rule.weights[order - 1 - i] = 0.5 * w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.5;
  return rule;
}

const UnitRule& unit_rule(int order) {
  static std::mutex mutex;
  static std::map<int, UnitRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_unit_rule(order)).first;
  return it->second;
}

}  // namespace

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * f(nodes[k]);
  return sum;
}

QuadratureRule gauss_rule(int order, int panels) {
  if (order < 1 || panels < 1) {
    throw ArgumentError("gauss_rule: order and panels must be >= 1");
  }
  const UnitRule& unit = unit_rule(order);
  QuadratureRule rule;
  rule.order = order;
  rule.panels = panels;
  rule.nodes.reserve(static_cast<std::size_t>(order) * panels);
  rule.weights.reserve(static_cast<std::size_t>(order) * panels);
  const double h = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    for (int k = 0; k < order; ++k) {
      rule.nodes.push_back((p + unit.nodes[k]) * h);
      rule.weights.push_back(unit.weights[k] * h);
    }
  }
  return rule;
}

QuadratureRule default_rule(int n) { return gauss_rule(std::max(n + 2, 20), 2); }

std::vector<double> basis_row(int n, double x) {
  if (n < 0) throw ArgumentError("basis_row: negative degree");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError("basis_row: x = " + std::to_string(x) + " outside [0, 1]");
  }
  // row[i] = C(n,i) x^i (1-x)^(n-i): powers of x forward, powers of 1-x
  // backward, binomials by the multiplicative recurrence.
  std::vector<double> row(n + 1);
  const double u = 1.0 - x;
  double xp = 1.0;
  for (int i = 0; i <= n; ++i) {
    row[i] = xp;
    xp *= x;
  }
  double up = 1.0;
  double binom = 1.0;
  for (int i = n; i >= 0; --i) {
    row[i] *= up;
    up *= u;
  }
  for (int i = 0; i <= n; ++i) {
    row[i] *= binom;
    binom = binom * (n - i) / (i + 1);
  }
  return row;
}

std::vector<extended> basis_row_extended(int n, double x) {
  if (n < 0) throw ArgumentError("basis_row: negative degree");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError("basis_row: x = " + std::to_string(x) + " outside [0, 1]");
  }
  std::vector<extended> row(n + 1);
  const extended xe = x;
  const extended u = 1 - xe;
  extended xp = 1;
  for (int i = 0; i <= n; ++i) {
    row[i] = xp;
    xp *= xe;
  }
  extended up = 1;
  for (int i = n; i >= 0; --i) {
    row[i] *= up * binomial_extended(n, i);
    up *= u;
  }
  return row;
}

std::vector<double> sample(const std::function<double(double)>& g,
                           const QuadratureRule& rule) {
  std::vector<double> values(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = rule.nodes[k];
    double v;
    try {
      v = g(x);
    } catch (const EvaluationError& e) {
      throw EvaluationError(std::string(e.what()) + " at x = " + std::to_string(x), x);
    }
    if (!std::isfinite(v)) {
      throw EvaluationError("non-finite right-hand side at x = " + std::to_string(x), x);
    }
    values[k] = v;
  }
  return values;
}

std::vector<extended> moments_from_samples(std::span<const double> samples,
                                           int degree, const QuadratureRule& rule) {
  if (degree < 0) throw ArgumentError("moments_from_samples: negative degree");
  if (samples.size() != rule.nodes.size()) {
    throw ArgumentError("moments_from_samples: one sample per node expected");
  }
  std::vector<extended> moments(degree + 1, 0);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const extended wg = static_cast<extended>(rule.weights[k]) * samples[k];
    const auto row = basis_row_extended(degree, rule.nodes[k]);
    for (int q = 0; q <= degree; ++q) moments[q] += wg * row[q];
  }
  return moments;
}

MomentVector moment_integrals(const std::function<double(double)>& g, int n,
                              int m, const QuadratureRule& rule) {
  if (m < 0 || n < m) throw ArgumentError("moment_integrals: need 0 <= m <= n");
  const auto samples = sample(g, rule);
  return MomentVector{n, m, moments_from_samples(samples, n - m, rule)};
}

}  // namespace berndual
