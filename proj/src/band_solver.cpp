#include "berndual/band_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "berndual/errors.hpp"
#include "berndual/numeric.hpp"

namespace berndual {

namespace {

constexpr double kPivotTolerance = 1e-13;

double signed_binomial(int m, int h) {
  return ((m - h) % 2 == 0 ? 1.0 : -1.0) * binomial(m, h);
}

double pivot_floor(const BandedToeplitz& s) {
  double scale = 0.0;
  for (double d : s.diagonals) scale = std::max(scale, std::abs(d));
  return kPivotTolerance * scale;
}

std::vector<double> back_substitution(const BandedToeplitz& s, double tiny) {
  const int size = s.size;
  const double diag = s.diagonal(0);
  if (std::abs(diag) <= tiny) throw SingularSystemError(size - 1);
  std::vector<double> p(size);
  for (int i = size - 1; i >= 0; --i) {
    double acc = s.rhs[i];
    const int last = std::min(size - 1, i + s.upper_bw);
    for (int j = i + 1; j <= last; ++j) acc -= s.diagonal(j - i) * p[j];
    p[i] = acc / diag;
  }
  return p;
}

std::vector<double> forward_substitution(const BandedToeplitz& s, double tiny) {
  const int size = s.size;
  const double diag = s.diagonal(0);
  if (std::abs(diag) <= tiny) throw SingularSystemError(0);
  std::vector<double> p(size);
  for (int i = 0; i < size; ++i) {
    double acc = s.rhs[i];
    const int first = std::max(0, i - s.lower_bw);
    for (int j = first; j < i; ++j) acc -= s.diagonal(j - i) * p[j];
    p[i] = acc / diag;
  }
  return p;
}

// Thomas algorithm without pivoting. For the (1, -2, 1) stencil the pivots
// are -(i+2)/(i+1).
std::vector<double> tridiagonal(const BandedToeplitz& s, double tiny) {
  const int size = s.size;
  const double sub = s.diagonal(-1);
  const double diag = s.diagonal(0);
  const double sup = s.diagonal(1);
  std::vector<double> c(size);
  std::vector<double> d(size);
  double pivot = diag;
  if (std::abs(pivot) <= tiny) throw SingularSystemError(0);
  c[0] = sup / pivot;
  d[0] = s.rhs[0] / pivot;
  for (int i = 1; i < size; ++i) {
    pivot = diag - sub * c[i - 1];
    if (std::abs(pivot) <= tiny) throw SingularSystemError(i);
    c[i] = sup / pivot;
    d[i] = (s.rhs[i] - sub * d[i - 1]) / pivot;
  }
  std::vector<double> p(size);
  p[size - 1] = d[size - 1];
  for (int i = size - 2; i >= 0; --i) p[i] = d[i] - c[i] * p[i + 1];
  return p;
}

// Gaussian elimination with partial pivoting in band storage. Row swaps can
// push fill-in up to k + l above the diagonal, so each row keeps columns
// i - k .. i + k + l.
std::vector<double> banded_lu(const BandedToeplitz& s, double tiny) {
  const int size = s.size;
  const int kl = s.lower_bw;
  const int ku = s.upper_bw + kl;
  const int width = kl + ku + 1;
  std::vector<double> band(static_cast<std::size_t>(size) * width, 0.0);
  auto at = [&](int i, int j) -> double& {
    return band[static_cast<std::size_t>(i) * width + (j - i + kl)];
  };
  for (int i = 0; i < size; ++i) {
    for (int j = std::max(0, i - kl); j <= std::min(size - 1, i + s.upper_bw); ++j) {
      at(i, j) = s.entry(i, j);
    }
  }
  std::vector<double> rhs = s.rhs;

  for (int col = 0; col < size; ++col) {
    const int last_row = std::min(size - 1, col + kl);
    int pivot_row = col;
    for (int r = col + 1; r <= last_row; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(pivot_row, col))) pivot_row = r;
    }
    if (std::abs(at(pivot_row, col)) <= tiny) throw SingularSystemError(col);
    const int last_col = std::min(size - 1, col + ku);
    if (pivot_row != col) {
      for (int j = col; j <= last_col; ++j) std::swap(at(col, j), at(pivot_row, j));
      std::swap(rhs[col], rhs[pivot_row]);
    }
    const double pivot = at(col, col);
    for (int r = col + 1; r <= last_row; ++r) {
      const double factor = at(r, col) / pivot;
      if (factor == 0.0) continue;
      at(r, col) = 0.0;
      for (int j = col + 1; j <= last_col; ++j) at(r, j) -= factor * at(col, j);
      rhs[r] -= factor * rhs[col];
    }
  }

  std::vector<double> p(size);
  for (int i = size - 1; i >= 0; --i) {
    double acc = rhs[i];
    const int last_col = std::min(size - 1, i + ku);
    for (int j = i + 1; j <= last_col; ++j) acc -= at(i, j) * p[j];
    p[i] = acc / at(i, i);
  }
  return p;
}

}  // namespace

BandedToeplitz assemble_matrix(int n, int m, int k, int l) {
  if (k < 0 || l < 0 || k + l != m) {
    throw ArgumentError("assemble_matrix: need k, l >= 0 with k + l = m (k = " +
                        std::to_string(k) + ", l = " + std::to_string(l) +
                        ", m = " + std::to_string(m) + ")");
  }
  if (n < m) throw ArgumentError("assemble_matrix: need n >= m");
  BandedToeplitz s;
  s.size = n - m + 1;
  s.lower_bw = k;
  s.upper_bw = l;
  s.diagonals.resize(m + 1);
  for (int d = -k; d <= l; ++d) {
    s.diagonals[d + k] = ((l - d) % 2 == 0 ? 1.0 : -1.0) * binomial(m, d + k);
  }
  s.rhs.assign(s.size, 0.0);
  return s;
}

std::vector<double> assemble_rhs(int n, int m, int k, int l,
                                 const DualCoeffTable& duals,
                                 std::span<const extended> moments,
                                 const OuterCoefficients& outer) {
  if (k < 0 || l < 0 || k + l != m || n < m) {
    throw ArgumentError("assemble_rhs: need k + l = m <= n");
  }
  const int size = n - m + 1;
  if (duals.degree() != n - m) {
    throw ArgumentError("assemble_rhs: dual table has degree " +
                        std::to_string(duals.degree()) + ", expected " +
                        std::to_string(n - m));
  }
  if (static_cast<int>(moments.size()) != size) {
    throw ArgumentError("assemble_rhs: expected " + std::to_string(size) + " moments");
  }
  if (static_cast<int>(outer.left.size()) != k ||
      static_cast<int>(outer.right.size()) != l) {
    throw ArgumentError("assemble_rhs: outer coefficient counts do not match k, l");
  }

  const extended scale = 1 / static_cast<extended>(falling_factorial(n, m));
  std::vector<double> v(size);
  for (int i = 0; i < size; ++i) {
    const auto c = duals.row(i);
    extended projection = 0;
    for (int q = 0; q < size; ++q) projection += c[q] * moments[q];
    extended value = scale * projection;
    for (int h = 0; h <= k - i - 1; ++h) {
      value -= static_cast<extended>(signed_binomial(m, h)) * outer.left[i + h];
    }
    for (int h = std::max(0, n - l - i + 1); h <= m; ++h) {
      value -= static_cast<extended>(signed_binomial(m, h)) * outer.right[n - (i + h)];
    }
    v[i] = static_cast<double>(value);
  }
  return v;
}

BandPath band_path(const BandedToeplitz& system) {
  if (system.lower_bw == 0) return BandPath::back_substitution;
  if (system.upper_bw == 0) return BandPath::forward_substitution;
  if (system.lower_bw == 1 && system.upper_bw == 1) return BandPath::tridiagonal;
  return BandPath::banded_lu;
}

std::vector<double> solve(const BandedToeplitz& system) {
  if (system.size < 1) throw ArgumentError("solve: empty system");
  if (static_cast<int>(system.rhs.size()) != system.size ||
      static_cast<int>(system.diagonals.size()) !=
          system.lower_bw + system.upper_bw + 1) {
    throw ArgumentError("solve: inconsistent system dimensions");
  }
  const double tiny = pivot_floor(system);
  switch (band_path(system)) {
    case BandPath::back_substitution: return back_substitution(system, tiny);
    case BandPath::forward_substitution: return forward_substitution(system, tiny);
    case BandPath::tridiagonal: return tridiagonal(system, tiny);
    case BandPath::banded_lu: break;
  }
  return banded_lu(system, tiny);
}

}  // namespace berndual
