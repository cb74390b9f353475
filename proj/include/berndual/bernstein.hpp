#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace berndual {

/// Polynomial of degree n in the Bernstein basis of [0, 1]:
///   w(x) = sum_i p_i B_i^n(x),  B_i^n(x) = C(n,i) x^i (1-x)^(n-i).
/// Holds n + 1 finite coefficients. Immutable after construction.
class BernsteinPoly {
public:
  /// Throws ArgumentError on an empty or non-finite coefficient sequence.
  explicit BernsteinPoly(std::vector<double> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const BernsteinPoly&, const BernsteinPoly&) = default;

private:
  std::vector<double> coeffs_;
};

/// Forward differences of a coefficient sequence. Row r holds
/// Delta^r p_j for j = 0..n-r; row 0 is the source.
struct DiffTable {
  int base_degree = 0;
  std::vector<std::vector<double>> rows;
};

enum class End { left, right };

/// B_i^n(x) by direct powers. Throws ArgumentError for i outside [0, n] or x
/// outside [0, 1].
double basis_value(int n, int i, double x);

/// Horner-like evaluation in t = x/(1-x), mirrored for x > 1/2. O(n).
double eval(const BernsteinPoly& p, double x);

DiffTable diff_table(std::span<const double> coeffs, int r_max);
DiffTable diff_table(const BernsteinPoly& p, int r_max);

/// r-th derivative as a degree n-r Bernstein polynomial:
/// coefficients n!/(n-r)! * Delta^r p_j.
BernsteinPoly derivative(const BernsteinPoly& p, int r);

/// All derivatives w, w', ..., w^(r_max) from a single difference table.
std::vector<BernsteinPoly> derivatives(const BernsteinPoly& p, int r_max);

/// w^(r)(0) or w^(r)(1) straight from the end coefficients.
double endpoint_derivative(const BernsteinPoly& p, int r, End end);

}  // namespace berndual
