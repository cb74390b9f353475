#pragma once

#include <span>
#include <vector>

#include "berndual/numeric.hpp"

namespace berndual {

/// Bernstein coefficients of the dual Bernstein basis of degree n:
///   D_i^n(x) = sum_j c(i, j) B_j^n(x),   <D_i^n, B_j^n> = delta_ij
/// under the L2 inner product on [0, 1]. Equivalently, the table is the
/// inverse of the Bernstein Gram matrix.
///
/// Entries alternate in sign and grow roughly like 4^n. They are computed
/// and kept in extended precision; even so, projections through the table
/// lose accuracy once n gets past ~45.
class DualCoeffTable {
public:
  DualCoeffTable(int degree, std::vector<extended> entries);

  int degree() const noexcept { return degree_; }
  double operator()(int i, int j) const { return static_cast<double>(entries_[index(i, j)]); }
  std::span<const extended> row(int i) const {
    return std::span<const extended>(entries_).subspan(index(i, 0), degree_ + 1);
  }

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * (degree_ + 1) + j;
  }

  int degree_;
  std::vector<extended> entries_;
};

/// Row-by-row three-term recurrence in i, O(n^2) total.
DualCoeffTable dual_coefficients(int n);

/// <B_i^n, B_j^n> = C(n,i) C(n,j) / ((2n+1) C(2n, i+j)).
double bernstein_gram_entry(int n, int i, int j);

}  // namespace berndual
