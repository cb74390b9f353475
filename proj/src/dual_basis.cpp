#include "berndual/dual_basis.hpp"

#include <cassert>
#include <string>

#include "berndual/errors.hpp"
#include "berndual/numeric.hpp"

namespace berndual {

DualCoeffTable::DualCoeffTable(int degree, std::vector<extended> entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (degree_ < 0 ||
      entries_.size() != static_cast<std::size_t>(degree_ + 1) * (degree_ + 1)) {
    throw ArgumentError("DualCoeffTable: expected (n+1)^2 entries");
  }
}

DualCoeffTable dual_coefficients(int n) {
  if (n < 0) throw ArgumentError("dual_coefficients: negative degree");
  const int size = n + 1;
  std::vector<extended> c(static_cast<std::size_t>(size) * size, 0);
  auto at = [&](int i, int j) -> extended& {
    return c[static_cast<std::size_t>(i) * size + j];
  };
  // c(i, j) with the zero convention outside the table.
  auto get = [&](int i, int j) -> extended {
    if (i < 0 || j < 0 || j > n) return 0;
    return at(i, j);
  };

  // Starting row: (-1)^j (n+1) (n+1-j)_{j+1} / (j+1)!
  for (int j = 0; j <= n; ++j) {
    extended pochhammer = 1;
    for (int t = n + 1 - j; t <= n + 1; ++t) pochhammer *= t;
    extended factorial = 1;
    for (int t = 2; t <= j + 1; ++t) factorial *= t;
    at(0, j) = (j % 2 == 0 ? 1 : -1) * extended(n + 1) * (pochhammer / factorial);
  }

  auto A = [n](int u) { return static_cast<extended>(u - n) * (u + 1); };
  auto B = [n](int u) { return static_cast<extended>(u) * (u - n - 1); };

  for (int i = 0; i < n; ++i) {
    const extended denom = A(i);
    assert(denom != 0);  // A(i) = (i-n)(i+1) vanishes only at i = n
    for (int j = 0; j <= n; ++j) {
      const extended num = extended(2 * (i - j) * (i + j - n)) * get(i, j) +
                         B(j) * get(i, j - 1) + A(j) * get(i, j + 1) -
                         B(i) * get(i - 1, j);
      at(i + 1, j) = num / denom;
    }
  }
  return DualCoeffTable(n, std::move(c));
}

double bernstein_gram_entry(int n, int i, int j) {
  if (n < 0 || i < 0 || i > n || j < 0 || j > n) {
    throw ArgumentError("bernstein_gram_entry: index outside [0, " +
                        std::to_string(n) + "]");
  }
  return binomial(n, i) * binomial(n, j) /
         ((2.0 * n + 1.0) * binomial(2 * n, i + j));
}

}  // namespace berndual
