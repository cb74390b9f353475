#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "berndual/bernstein.hpp"
#include "berndual/errors.hpp"
#include "oracles.hpp"

using namespace berndual;

namespace {

std::vector<double> random_coeffs(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(n + 1);
  for (double& v : c) v = u(rng);
  return c;
}

std::vector<double> to_vec(const BernsteinPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

}  // namespace

TEST_CASE("construction validates coefficients") {
  CHECK_THROWS_AS(BernsteinPoly(std::vector<double>{}), ArgumentError);
  CHECK_THROWS_AS(BernsteinPoly({1.0, std::nan("")}), ArgumentError);
  CHECK_THROWS_AS(BernsteinPoly({INFINITY}), ArgumentError);
  const BernsteinPoly p({1.0, 2.0, 3.0});
  CHECK(p.degree() == 2);
  CHECK(p[1] == 2.0);
}

TEST_CASE("basis_value examples") {
  CHECK(basis_value(2, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(basis_value(5, 0, 0.0) == 1.0);
  CHECK(basis_value(4, 3, 0.25) == doctest::Approx(0.046875).epsilon(1e-15));
  CHECK_THROWS_AS(basis_value(3, 4, 0.5), ArgumentError);
  CHECK_THROWS_AS(basis_value(3, -1, 0.5), ArgumentError);
  CHECK_THROWS_AS(basis_value(3, 1, 1.5), ArgumentError);
  // no overflow at n = 60
  CHECK(std::isfinite(basis_value(60, 30, 0.5)));
}

TEST_CASE("partition of unity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 31;
    const double x = u(rng);
    double s = 0.0;
    for (int i = 0; i <= n; ++i) s += basis_value(n, i, x);
    CHECK(std::abs(s - 1.0) <= 1e-13);
  }
}

TEST_CASE("endpoint cardinality") {
  for (int n = 0; n <= 30; ++n) {
    for (int i = 0; i <= n; ++i) {
      CHECK(basis_value(n, i, 0.0) == (i == 0 ? 1.0 : 0.0));
      CHECK(basis_value(n, i, 1.0) == (i == n ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("eval examples") {
  CHECK(eval(BernsteinPoly({0.0, 0.5, 1.0}), 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  const BernsteinPoly constant(std::vector<double>(9, -2.75));
  for (double x : {0.0, 0.1, 0.5, 0.77, 1.0}) {
    CHECK(eval(constant, x) == doctest::Approx(-2.75).epsilon(1e-15));
  }
  const BernsteinPoly seed3({2.0, 5.0 / 3.0, 11.0 / 6.0, 8.0 / 3.0});
  CHECK(eval(seed3, 1.0) == 8.0 / 3.0);
  CHECK(eval(seed3, 0.0) == 2.0);
  CHECK_THROWS_AS(eval(seed3, -0.01), ArgumentError);
  CHECK_THROWS_AS(eval(seed3, 1.01), ArgumentError);
}

TEST_CASE("eval matches de Casteljau") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = trial % 41;
    const auto c = random_coeffs(rng, n);
    const double x = u(rng);
    const double ref = oracle::de_casteljau(c, x);
    const double got = eval(BernsteinPoly(c), x);
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    CHECK(std::abs(got - ref) <= 1e-12 * std::max(std::abs(ref), scale));
  }
}

TEST_CASE("diff_table examples and structure") {
  const auto t = diff_table(BernsteinPoly({1.0, 3.0, 6.0}), 2);
  CHECK(t.base_degree == 2);
  CHECK(t.rows == std::vector<std::vector<double>>{{1, 3, 6}, {2, 3}, {1}});

  const auto sq = diff_table(BernsteinPoly({0.0, 1.0, 4.0, 9.0}), 3);
  CHECK(sq.rows == std::vector<std::vector<double>>{{0, 1, 4, 9}, {1, 3, 5}, {2, 2}, {0}});

  const auto flat = diff_table(BernsteinPoly({4.0, 4.0, 4.0, 4.0}), 1);
  for (double v : flat.rows[1]) CHECK(v == 0.0);

  CHECK_THROWS_AS(diff_table(BernsteinPoly({1.0, 2.0}), 2), ArgumentError);

  std::mt19937_64 rng(3);
  const auto c = random_coeffs(rng, 12);
  const auto big = diff_table(BernsteinPoly(c), 12);
  CHECK(big.rows[0] == c);
  for (int r = 1; r <= 12; ++r) {
    REQUIRE(big.rows[r].size() == static_cast<std::size_t>(12 - r + 1));
    for (std::size_t j = 0; j < big.rows[r].size(); ++j) {
      CHECK(big.rows[r][j] == big.rows[r - 1][j + 1] - big.rows[r - 1][j]);
    }
  }
}

TEST_CASE("derivative examples") {
  const BernsteinPoly x({0.0, 0.5, 1.0});
  CHECK(to_vec(derivative(x, 1)) == std::vector<double>{1.0, 1.0});
  CHECK(derivative(x, 0) == x);
  CHECK(to_vec(derivative(BernsteinPoly({0.0, 0.0, 1.0}), 2)) == std::vector<double>{2.0});
  CHECK_THROWS_AS(derivative(x, 3), ArgumentError);

  const auto all = derivatives(BernsteinPoly({0.0, 1.0, 4.0, 9.0}), 3);
  REQUIRE(all.size() == 4);
  for (int r = 0; r <= 3; ++r) CHECK(all[r] == derivative(BernsteinPoly({0.0, 1.0, 4.0, 9.0}), r));
}

TEST_CASE("derivative matches central differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const double h = 1e-6;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 15;
    const BernsteinPoly p(random_coeffs(rng, n));
    const double x = u(rng);
    const double fd = (eval(p, x + h) - eval(p, x - h)) / (2 * h);
    CHECK(std::abs(eval(derivative(p, 1), x) - fd) <= 1e-5);
  }
}

TEST_CASE("derivative order additivity") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 20;
    const BernsteinPoly p(random_coeffs(rng, n));
    const int r1 = static_cast<int>(rng() % (n + 1));
    const int r2 = static_cast<int>(rng() % (n - r1 + 1));
    const auto lhs = derivative(derivative(p, r1), r2);
    const auto rhs = derivative(p, r1 + r2);
    REQUIRE(lhs.degree() == rhs.degree());
    for (int j = 0; j <= lhs.degree(); ++j) {
      CHECK(std::abs(lhs[j] - rhs[j]) <= 1e-12 * std::max(1.0, std::abs(rhs[j])));
    }
  }
}

TEST_CASE("endpoint_derivative examples") {
  CHECK(endpoint_derivative(BernsteinPoly({0.0, 1.0}), 1, End::left) == 1.0);
  const BernsteinPoly seed3({2.0, 5.0 / 3.0, 11.0 / 6.0, 8.0 / 3.0});
  CHECK(endpoint_derivative(seed3, 2, End::left) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(endpoint_derivative(seed3, 0, End::right) == seed3[3]);
  CHECK_THROWS_AS(endpoint_derivative(seed3, 4, End::left), ArgumentError);
}

TEST_CASE("endpoint_derivative agrees with evaluated derivative") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 20;
    const BernsteinPoly p(random_coeffs(rng, n));
    const int r = static_cast<int>(rng() % (std::min(n, 6) + 1));
    const auto d = derivative(p, r);
    const double scale = std::max(1.0, std::abs(d[0]) + std::abs(d[d.degree()]));
    CHECK(std::abs(endpoint_derivative(p, r, End::left) - eval(d, 0.0)) <= 1e-12 * scale);
    CHECK(std::abs(endpoint_derivative(p, r, End::right) - eval(d, 1.0)) <= 1e-12 * scale);
  }
}
