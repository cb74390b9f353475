#pragma once

#include <span>
#include <vector>

#include "berndual/dual_basis.hpp"
#include "berndual/quadrature.hpp"

namespace berndual {

/// Coefficients of w_n pinned by the boundary conditions: left[i] = p_i for
/// i < k, right[j] = p_{n-j} for j < l.
struct OuterCoefficients {
  std::vector<double> left;
  std::vector<double> right;
};

/// Square Toeplitz matrix with lower bandwidth k and upper bandwidth l,
/// stored by its k + l + 1 diagonals, together with a right-hand side.
/// Entry (i, j) = diagonal(j - i) inside the band, 0 outside.
struct BandedToeplitz {
  int size = 0;
  int lower_bw = 0;
  int upper_bw = 0;
  std::vector<double> diagonals;  // offsets -lower_bw .. upper_bw
  std::vector<double> rhs;

  double diagonal(int offset) const {
    if (offset < -lower_bw || offset > upper_bw) return 0.0;
    return diagonals[offset + lower_bw];
  }
  double entry(int i, int j) const { return diagonal(j - i); }
};

/// Matrix of the inner-coefficient system for degree n: offset d carries
/// (-1)^(l-d) C(m, d+k), i.e. the signed m-th difference stencil. Size
/// n - m + 1; rhs zeroed. Throws ArgumentError unless k + l = m, k, l >= 0,
/// n >= m.
BandedToeplitz assemble_matrix(int n, int m, int k, int l);

/// Right-hand side of the inner-coefficient system: the dual projection of the
/// moments, scaled by (n-m)!/n!, minus the contribution of the outer
/// coefficients to each row's m-th difference.
std::vector<double> assemble_rhs(int n, int m, int k, int l,
                                 const DualCoeffTable& duals,
                                 std::span<const extended> moments,
                                 const OuterCoefficients& outer);

/// Which elimination path `solve` takes.
enum class BandPath { back_substitution, forward_substitution, tridiagonal, banded_lu };

BandPath band_path(const BandedToeplitz& system);

/// Solves system.entry * p = system.rhs.
///   k = 0       back substitution
///   l = 0       forward substitution
///   k = l = 1   tridiagonal elimination
///   otherwise   band LU with partial pivoting
/// Throws SingularSystemError when a pivot falls below 1e-13 of the largest
/// matrix entry.
std::vector<double> solve(const BandedToeplitz& system);

}  // namespace berndual
