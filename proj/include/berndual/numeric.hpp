#pragma once

#include <cstddef>
#include <span>

namespace berndual {

/// Working type of the dual projection (dual coefficient table, moments and
/// the products between them). The projection cancels terms of size ~4^n
/// down to O(1) results, so it runs in 113-bit binary128 and is rounded to
/// double once at the end.
using extended = __float128;

/// Binomial coefficient C(n, k) by the multiplicative recurrence; 0 when k is
/// outside [0, n]. Exact in double for n <= 56.
double binomial(int n, int k);
extended binomial_extended(int n, int k);

/// n! / (n - r)!, the product n (n-1) ... (n-r+1). Equals 1 for r = 0.
double falling_factorial(int n, int r);

/// Dot product evaluated as if in twice the working precision (error-free
/// products via fma, compensated summation), then rounded once.
double accurate_dot(std::span<const double> a, std::span<const double> b);

}  // namespace berndual
