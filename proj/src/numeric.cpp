#include "berndual/numeric.hpp"

#include <cassert>
#include <cmath>

namespace berndual {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (n <= 66) {
    // Integer recurrence; C(n, k) fits in 64 bits here, the product in 128.
    unsigned __int128 c = 1;
    for (int j = 1; j <= k; ++j) c = c * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    return static_cast<double>(static_cast<unsigned long long>(c));
  }
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

extended binomial_extended(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  extended c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

double falling_factorial(int n, int r) {
  assert(r >= 0 && r <= n);
  double f = 1.0;
  for (int j = 0; j < r; ++j) f *= static_cast<double>(n - j);
  return f;
}

namespace {

// Knuth's TwoSum: s + e == a + b exactly.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

}  // namespace

double accurate_dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double prod = a[i] * b[i];
    const double prod_err = std::fma(a[i], b[i], -prod);
    double s, e;
    two_sum(sum, prod, s, e);
    sum = s;
    comp += e + prod_err;
  }
  return sum + comp;
}

}  // namespace berndual
