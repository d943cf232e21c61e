#pragma once

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "harmonia/polynomial.hpp"

namespace harmonia::testing {

inline HomogeneousPolynomial random_form(int n, int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  HomogeneousPolynomial::TermMap terms;
  for (const Exponent& e : monomial_exponents(n, degree)) terms[e] = coef(rng);
  return {n, degree, std::move(terms)};
}

inline std::vector<double> random_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> x(n);
  double r = 0.0;
  do {
    r = 0.0;
    for (double& v : x) {
      v = g(rng);
      r += v * v;
    }
  } while (r < 1e-12);
  r = std::sqrt(r);
  for (double& v : x) v /= r;
  return x;
}

inline double halton(std::size_t index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

// Quasi-random points on S^{n-1}: Halton points of [-1, 1]^n (prime bases
// 2, 3, 5, ...) pushed radially onto the sphere. Deterministic; the bases
// play the role of the seed.
inline std::vector<double> halton_sphere(int n, std::size_t count) {
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  std::vector<double> out;
  out.reserve(count * n);
  std::vector<double> x(n);
  for (std::size_t i = 1; out.size() < count * n; ++i) {
    double r = 0.0;
    for (int d = 0; d < n; ++d) {
      x[d] = 2.0 * halton(i, kPrimes[d]) - 1.0;
      r += x[d] * x[d];
    }
    if (r < 1e-6) continue;
    r = std::sqrt(r);
    for (double v : x) out.push_back(v / r);
  }
  return out;
}

inline double sampled_min(const HomogeneousPolynomial& f, std::span<const double> points) {
  const auto n = static_cast<std::size_t>(f.n());
  double best = INFINITY;
  for (std::size_t p = 0; p + n <= points.size(); p += n) {
    best = std::min(best, f(points.subspan(p, n)));
  }
  return best;
}

inline double sampled_sup_norm(const HomogeneousPolynomial& f,
                               std::span<const double> points) {
  const auto n = static_cast<std::size_t>(f.n());
  double best = 0.0;
  for (std::size_t p = 0; p + n <= points.size(); p += n) {
    best = std::max(best, std::abs(f(points.subspan(p, n))));
  }
  return best;
}

inline double max_coefficient_gap(const HomogeneousPolynomial& a,
                                  const HomogeneousPolynomial& b) {
  return (a - b).max_abs_coefficient();
}

}  // namespace harmonia::testing
