#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "harmonia/builtins.hpp"
#include "harmonia/cubature.hpp"
#include "harmonia/error.hpp"
#include "harmonia/polynomial.hpp"
#include "support.hpp"

using namespace harmonia;
using harmonia::testing::random_form;
using harmonia::testing::random_unit_vector;

namespace {

// x^e by std::pow, independent of the memoized power table.
double naive_value(const HomogeneousPolynomial& f, std::span<const double> x) {
  double sum = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(x[i], e[i]);
    sum += t;
  }
  return sum;
}

}  // namespace

TEST_CASE("construction enforces homogeneity") {
  CHECK_THROWS_AS(HomogeneousPolynomial(3, 2, {{{1, 0, 0}, 1.0}}), DegreeError);
  CHECK_THROWS_AS(HomogeneousPolynomial(3, 2, {{{1, 1}, 1.0}}), DimensionError);
  CHECK_THROWS_AS(HomogeneousPolynomial(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousPolynomial(3, -1), std::invalid_argument);

  const HomogeneousPolynomial f(3, 2, {{{1, 1, 0}, 2.0}, {{0, 0, 2}, 0.0}});
  CHECK(f.size() == 1);
  CHECK(f.coefficient({1, 1, 0}) == 2.0);
  CHECK(f.coefficient({2, 0, 0}) == 0.0);
}

TEST_CASE("arithmetic cancels exactly and tracks degree") {
  const auto x = HomogeneousPolynomial::linear_form(std::vector<double>{1, 0, 0});
  const auto y = HomogeneousPolynomial::linear_form(std::vector<double>{0, 1, 0});
  const auto f = x * y;
  CHECK(f.degree() == 2);
  CHECK((f - f).is_zero());
  CHECK((f + f) == 2.0 * f);
  CHECK_THROWS_AS(f + x, DegreeError);
  CHECK(HomogeneousPolynomial::norm_power(3, 2).size() == 6);
  CHECK(HomogeneousPolynomial::norm_power(3, 2).coefficient({2, 2, 0}) == 2.0);
}

TEST_CASE("evaluation matches a pow-based oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const auto f = random_form(n, 1 + trial % 7, rng);
    const auto x = random_unit_vector(n, rng);
    CHECK(f(x) == doctest::Approx(naive_value(f, x)).epsilon(1e-13));
  }
  const auto f = random_form(3, 2, rng);
  CHECK_THROWS_AS(f(std::vector<double>{1.0, 0.0}), DimensionError);
}

TEST_CASE("products and sums evaluate pointwise") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_form(3, 3, rng);
    const auto g = random_form(3, 2, rng);
    const auto h = random_form(3, 3, rng);
    const auto x = random_unit_vector(3, rng);
    CHECK((f * g)(x) == doctest::Approx(f(x) * g(x)).epsilon(1e-12));
    CHECK((f + h)(x) == doctest::Approx(f(x) + h(x)).epsilon(1e-12));
    CHECK(multiply_norm_power(f, 2)(x) == doctest::Approx(f(x)).epsilon(1e-12));
  }
}

TEST_CASE("laplacian and partial derivatives") {
  // Laplacian(x1^2 x2^2) = 2 x2^2 + 2 x1^2
  const HomogeneousPolynomial f(3, 4, {{{2, 2, 0}, 1.0}});
  const HomogeneousPolynomial expected(3, 2, {{{2, 0, 0}, 2.0}, {{0, 2, 0}, 2.0}});
  CHECK(laplacian(f) == expected);

  // ||x||^2 is not harmonic: Laplacian = 2n.
  CHECK(laplacian(HomogeneousPolynomial::norm_power(4, 1)) ==
        HomogeneousPolynomial::constant(4, 8.0));
  // x1^2 - x2^2 is harmonic.
  CHECK(laplacian(HomogeneousPolynomial(3, 2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, -1.0}}))
            .is_zero());
  CHECK(partial_derivative(f, 0) == HomogeneousPolynomial(3, 3, {{{1, 2, 0}, 2.0}}));
  CHECK(laplacian(HomogeneousPolynomial::constant(3, 5.0)).degree() == 0);

  // Finite-difference check of d/dx_i on a random cubic.
  std::mt19937_64 rng(13);
  const auto g = random_form(3, 3, rng);
  std::vector<double> x{0.3, -0.4, 0.5};
  for (int i = 0; i < 3; ++i) {
    auto xp = x;
    auto xm = x;
    xp[i] += 1e-6;
    xm[i] -= 1e-6;
    CHECK(partial_derivative(g, i)(x) == doctest::Approx((g(xp) - g(xm)) / 2e-6).epsilon(1e-7));
  }
}

TEST_CASE("monomial enumeration") {
  const auto e = monomial_exponents(3, 2);
  REQUIRE(e.size() == 6);
  CHECK(e.front() == Exponent{2, 0, 0});
  CHECK(e.back() == Exponent{0, 0, 2});
  CHECK(monomial_exponents(4, 6).size() == 84);
}

TEST_CASE("sphere integrals against closed forms") {
  using std::numbers::pi;
  CHECK(sphere_area(2) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(sphere_area(3) == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(sphere_area(4) == doctest::Approx(2 * pi * pi).epsilon(1e-15));
  CHECK(sphere_monomial_integral(std::vector<int>{2, 0}) == doctest::Approx(pi));
  CHECK(sphere_monomial_integral(std::vector<int>{2, 0, 0}) == doctest::Approx(4 * pi / 3));
  CHECK(sphere_monomial_integral(std::vector<int>{2, 2, 0}) == doctest::Approx(4 * pi / 15));
  CHECK(sphere_monomial_integral(std::vector<int>{4, 0, 0}) == doctest::Approx(4 * pi / 5));
  CHECK(sphere_monomial_integral(std::vector<int>{1, 1, 0}) == 0.0);
  CHECK(sphere_monomial_integral(std::vector<int>{0, 0, 0, 0}) == doctest::Approx(2 * pi * pi));
}

TEST_CASE("l2 norm") {
  const auto rule = product_cubature(3, 2);
  CHECK(l2_norm(HomogeneousPolynomial::norm_power(3, 1), rule) ==
        doctest::Approx(std::sqrt(4 * std::numbers::pi)));
  // ||x1||^2 = 4 pi / 3
  const auto x1 = HomogeneousPolynomial::linear_form(std::vector<double>{1, 0, 0});
  CHECK(l2_norm(x1, rule) == doctest::Approx(std::sqrt(4 * std::numbers::pi / 3)));
  CHECK_THROWS_AS(l2_norm(HomogeneousPolynomial::norm_power(3, 2), product_cubature(3, 3)),
                  DegreeError);
}

TEST_CASE("builtin forms") {
  const auto m = motzkin();
  CHECK(m.n() == 3);
  CHECK(m.degree() == 6);
  CHECK(m.size() == 4);
  const double r = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(m(std::vector<double>{r, r, r})) < 1e-15);
  CHECK(m(std::vector<double>{0, 0, 1}) == 1.0);

  const auto rb = robinson();
  CHECK(rb.n() == 4);
  CHECK(rb(std::vector<double>{0, 0, 0, 1}) == 0.0);
  // Against the factored display.
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_unit_vector(4, rng);
    const double a = x[0], b = x[1], c = x[2], d = x[3];
    const double direct = a * a * (a - d) * (a - d) + b * b * (b - d) * (b - d) +
                          c * c * (c - d) * (c - d) + 2 * a * b * c * (a + b + c - 2 * d);
    CHECK(rb(x) == doctest::Approx(direct).epsilon(1e-13));
  }
  CHECK_THROWS_AS(builtin_polynomial("choi-lam"), std::invalid_argument);
}

TEST_CASE("refined evaluation has the exact sign at rounded zeros") {
  const auto rb = robinson();
  const double a = std::sqrt(0.5);
  const double b = std::sqrt(1.0 - a * a);
  const std::vector<double> x{a, 0.0, 0.0, b};
  const double v = evaluate_refined(rb, x);
  CHECK(v >= 0.0);
  CHECK(v < 1e-30);
  std::mt19937_64 rng(15);
  const auto f = random_form(3, 4, rng);
  const auto y = random_unit_vector(3, rng);
  CHECK(evaluate_refined(f, y) == f(y));
}
