#include "berndual/bernstein.hpp"

#include <cmath>
#include <string>

#include "berndual/errors.hpp"
#include "berndual/numeric.hpp"

namespace berndual {

namespace {

void check_unit_interval(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError(std::string(who) + ": x = " + std::to_string(x) +
                        " outside [0, 1]");
  }
}

void check_order(int n, int r, const char* who) {
  if (r < 0 || r > n) {
    throw ArgumentError(std::string(who) + ": order " + std::to_string(r) +
                        " outside [0, " + std::to_string(n) + "]");
  }
}

}  // namespace

BernsteinPoly::BernsteinPoly(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw ArgumentError("BernsteinPoly: needs at least one coefficient");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!std::isfinite(coeffs_[i])) {
      throw ArgumentError("BernsteinPoly: coefficient " + std::to_string(i) +
                          " is not finite");
    }
  }
}

double basis_value(int n, int i, double x) {
  if (n < 0 || i < 0 || i > n) {
    throw ArgumentError("basis_value: index " + std::to_string(i) +
                        " outside [0, " + std::to_string(n) + "]");
  }
  check_unit_interval(x, "basis_value");
  return binomial(n, i) * std::pow(x, i) * std::pow(1.0 - x, n - i);
}

double eval(const BernsteinPoly& p, double x) {
  check_unit_interval(x, "eval");
  const auto c = p.coeffs();
  const int n = p.degree();
  if (n == 0) return c[0];

  if (x <= 0.5) {
    // (1-x)^n * sum_i C(n,i) p_i t^i,  t = x/(1-x), Horner from i = n down.
    const double t = x / (1.0 - x);
    double binom = 1.0;  // C(n, n)
    double s = c[n];
    for (int i = n - 1; i >= 0; --i) {
      binom = binom * (i + 1) / (n - i);  // C(n, i) from C(n, i+1)
      s = s * t + binom * c[i];
    }
    return s * std::pow(1.0 - x, n);
  }
  // x^n * sum_i C(n,i) p_i t^(n-i),  t = (1-x)/x.
  const double t = (1.0 - x) / x;
  double binom = 1.0;  // C(n, 0)
  double s = c[0];
  for (int i = 1; i <= n; ++i) {
    binom = binom * (n - i + 1) / i;
    s = s * t + binom * c[i];
  }
  return s * std::pow(x, n);
}

DiffTable diff_table(std::span<const double> coeffs, int r_max) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  check_order(n, r_max, "diff_table");
  DiffTable table;
  table.base_degree = n;
  table.rows.reserve(r_max + 1);
  table.rows.emplace_back(coeffs.begin(), coeffs.end());
  for (int r = 1; r <= r_max; ++r) {
    const auto& above = table.rows.back();
    std::vector<double> row(above.size() - 1);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = above[j + 1] - above[j];
    table.rows.push_back(std::move(row));
  }
  return table;
}

DiffTable diff_table(const BernsteinPoly& p, int r_max) {
  return diff_table(p.coeffs(), r_max);
}

namespace {

BernsteinPoly scaled_row(const DiffTable& table, int r) {
  const double scale = falling_factorial(table.base_degree, r);
  std::vector<double> c = table.rows[r];
  if (r > 0) {
    for (double& v : c) v *= scale;
  }
  return BernsteinPoly(std::move(c));
}

}  // namespace

BernsteinPoly derivative(const BernsteinPoly& p, int r) {
  check_order(p.degree(), r, "derivative");
  if (r == 0) return p;
  return scaled_row(diff_table(p, r), r);
}

std::vector<BernsteinPoly> derivatives(const BernsteinPoly& p, int r_max) {
  const DiffTable table = diff_table(p, r_max);
  std::vector<BernsteinPoly> out;
  out.reserve(r_max + 1);
  for (int r = 0; r <= r_max; ++r) out.push_back(scaled_row(table, r));
  return out;
}

double endpoint_derivative(const BernsteinPoly& p, int r, End end) {
  const int n = p.degree();
  check_order(n, r, "endpoint_derivative");
  const auto c = p.coeffs();
  const int first = end == End::left ? 0 : n - r;
  std::vector<double> weights(r + 1);
  for (int h = 0; h <= r; ++h) {
    weights[h] = ((r - h) % 2 == 0 ? 1.0 : -1.0) * binomial(r, h);
  }
  return falling_factorial(n, r) * accurate_dot(weights, c.subspan(first, r + 1));
}

}  // namespace berndual
