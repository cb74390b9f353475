#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the solver paths it is used to check.

#include <cctype>
#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

inline double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  long double c = 1.0L;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return static_cast<double>(c);
}

/// De Casteljau evaluation of a Bernstein polynomial.
inline double de_casteljau(std::vector<double> b, double x) {
  const double u = 1.0 - x;
  for (std::size_t level = 1; level < b.size(); ++level) {
    for (std::size_t j = 0; j + level < b.size(); ++j) b[j] = u * b[j] + x * b[j + 1];
  }
  return b[0];
}

/// Dense Gaussian elimination with partial pivoting in long double.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                       std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = rhs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    }
    if (m[piv][c] == 0.0L) throw std::runtime_error("dense_solve: singular");
    std::swap(m[c], m[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    long double acc = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[i] = static_cast<double>(acc / m[i][i]);
  }
  return x;
}

/// Power-basis coefficients (a_0 + a_1 x + ...) of sum_i p_i B_i^n.
inline std::vector<double> bernstein_to_monomial(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<long double> a(n + 1, 0.0L);
  // B_i^n = C(n,i) sum_t C(n-i,t) (-1)^t x^(i+t)
  for (int i = 0; i <= n; ++i) {
    for (int t = 0; t <= n - i; ++t) {
      a[i + t] += static_cast<long double>(p[i]) * choose(n, i) * choose(n - i, t) *
                  (t % 2 == 0 ? 1.0L : -1.0L);
    }
  }
  return {a.begin(), a.end()};
}

/// Bernstein coefficients of degree n of the polynomial sum_j a_j x^j
/// (requires a.size() <= n + 1): p_i = sum_{j<=i} C(i,j)/C(n,j) a_j.
inline std::vector<double> monomial_to_bernstein(const std::vector<double>& a, int n) {
  std::vector<double> p(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    long double acc = 0.0L;
    for (int j = 0; j <= i && j < static_cast<int>(a.size()); ++j) {
      acc += static_cast<long double>(choose(i, j)) / choose(n, j) * a[j];
    }
    p[i] = static_cast<double>(acc);
  }
  return p;
}

inline std::vector<double> monomial_derivative(std::vector<double> a, int r) {
  for (int step = 0; step < r; ++step) {
    if (a.size() <= 1) return {0.0};
    std::vector<double> d(a.size() - 1);
    for (std::size_t j = 1; j < a.size(); ++j) d[j - 1] = a[j] * static_cast<double>(j);
    a = std::move(d);
  }
  return a;
}

inline double horner(const std::vector<double>& a, double x) {
  long double s = 0.0L;
  for (std::size_t j = a.size(); j-- > 0;) s = s * x + a[j];
  return static_cast<double>(s);
}

/// Gauss-Legendre rule on [0, 1] via Golub-Welsch-free Newton in long double,
/// for oracle integrals of polynomials.
struct PlainRule {
  std::vector<double> x;
  std::vector<double> w;
};

inline PlainRule legendre_rule(int order) {
  PlainRule r;
  r.x.resize(order);
  r.w.resize(order);
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int i = 0; i < order; ++i) {
    long double z = std::cos(pi * (i + 0.75L) / (order + 0.5L));
    long double dp = 1.0L;
    for (int it = 0; it < 200; ++it) {
      long double p0 = 1.0L, p1 = z;
      for (int j = 2; j <= order; ++j) {
        const long double p2 = ((2.0L * j - 1.0L) * z * p1 - (j - 1.0L) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (z * p1 - p0) / (z * z - 1.0L);
      const long double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-19L) break;
    }
    long double p0 = 1.0L, p1 = z;
    for (int j = 2; j <= order; ++j) {
      const long double p2 = ((2.0L * j - 1.0L) * z * p1 - (j - 1.0L) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (z * p1 - p0) / (z * z - 1.0L);
    r.x[i] = static_cast<double>(0.5L * (1.0L - z));
    r.w[i] = static_cast<double>(1.0L / ((1.0L - z * z) * dp * dp));
  }
  return r;
}

/// Shunting-yard evaluator for literal-only expressions with + - * / ^,
/// unary minus and parentheses. Same precedence rules as the parser under
/// test: ^ (right-assoc) binds tighter than unary minus, which binds tighter
/// than * and /. Domain errors (x/0, negative base with fractional exponent,
/// 0 to a negative power) are reported as nullopt.
inline std::optional<double> shunting_yard(const std::string& src) {
  struct Op {
    char sym;  // '+', '-', '*', '/', '^', 'n' (negate), '('
  };
  auto prec = [](char c) {
    switch (c) {
      case '+': case '-': return 1;
      case '*': case '/': return 2;
      case 'n': return 3;
      case '^': return 4;
      default: return 0;
    }
  };
  std::vector<double> vals;
  std::vector<Op> ops;
  bool failed = false;
  auto apply = [&](char op) {
    if (op == 'n') {
      vals.back() = -vals.back();
      return;
    }
    const double b = vals.back();
    vals.pop_back();
    const double a = vals.back();
    double r = 0.0;
    switch (op) {
      case '+': r = a + b; break;
      case '-': r = a - b; break;
      case '*': r = a * b; break;
      case '/':
        if (b == 0.0) failed = true;
        r = b == 0.0 ? 0.0 : a / b;
        break;
      case '^':
        if ((a < 0.0 && std::trunc(b) != b) || (a == 0.0 && b < 0.0)) failed = true;
        r = std::pow(a, b);
        break;
    }
    vals.back() = r;
  };
  bool expect_operand = true;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (expect_operand) {
      if (c == '-') {
        ops.push_back({'n'});
        ++i;
      } else if (c == '(') {
        ops.push_back({'('});
        ++i;
      } else {
        std::size_t used = 0;
        vals.push_back(std::stod(src.substr(i), &used));
        i += used;
        expect_operand = false;
      }
      continue;
    }
    if (c == ')') {
      while (ops.back().sym != '(') {
        apply(ops.back().sym);
        ops.pop_back();
      }
      ops.pop_back();
      ++i;
      continue;
    }
    // binary operator
    const bool right_assoc = c == '^';
    while (!ops.empty() && ops.back().sym != '(' &&
           (prec(ops.back().sym) > prec(c) ||
            (prec(ops.back().sym) == prec(c) && !right_assoc))) {
      apply(ops.back().sym);
      ops.pop_back();
    }
    ops.push_back({c});
    expect_operand = true;
    ++i;
  }
  while (!ops.empty()) {
    apply(ops.back().sym);
    ops.pop_back();
  }
  if (failed) return std::nullopt;
  return vals.back();
}

}  // namespace oracle
