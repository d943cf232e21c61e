#include "harmonia/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "harmonia/error.hpp"

namespace harmonia {
namespace {

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

double gegenbauer_alpha(int n) {
  if (n < 3) {
    throw std::invalid_argument("Gegenbauer kernels need n >= 3, got n = " +
                                std::to_string(n));
  }
  return (n - 2) / 2.0;
}

// Solves Laplacian(||x||^2 q) = rhs for q of degree m = deg rhs, i.e.
// (2n + 4m) q + ||x||^2 Laplacian(q) = rhs. Applying Laplacian^j and using
// Laplacian(||x||^2 v) = ||x||^2 Laplacian(v) + (2n + 4 deg v) v gives the
// triangular system c_j u_j + ||x||^2 u_{j+1} = Laplacian^j(rhs) for
// u_j = Laplacian^j(q), with c_j = 2n + 4m + sum_{i<j} (2n + 4(m - 2 - 2i)).
HomogeneousPolynomial solve_norm_laplacian(const HomogeneousPolynomial& rhs) {
  const int n = rhs.n();
  const int m = rhs.degree();
  const int top = m / 2;
  std::vector<HomogeneousPolynomial> lap{rhs};
  for (int j = 1; j <= top; ++j) lap.push_back(laplacian(lap.back()));
  std::vector<double> c(top + 1);
  c[0] = 2.0 * n + 4.0 * m;
  for (int j = 1; j <= top; ++j) c[j] = c[j - 1] + 2.0 * n + 4.0 * (m - 2 - 2 * (j - 1));

  HomogeneousPolynomial u = lap[top] * (1.0 / c[top]);
  for (int j = top - 1; j >= 0; --j) {
    u = (lap[j] - multiply_norm_power(u, 1)) * (1.0 / c[j]);
  }
  return u;
}

}  // namespace

std::int64_t harmonic_dim(int n, int j) {
  if (n < 2) throw std::invalid_argument("harmonic_dim: n must be >= 2");
  if (j < 0) return 0;
  return binomial(n + j - 1, j) - binomial(n + j - 3, j - 2);
}

HarmonicExpansion harmonic_decompose(const HomogeneousPolynomial& f) {
  if (f.degree() % 2 != 0) {
    throw DegreeError("harmonic decomposition needs an even degree, got " +
                      std::to_string(f.degree()));
  }
  const int k = f.degree() / 2;
  HarmonicExpansion out{f.n(), k, {}};
  out.components.assign(k + 1, HomogeneousPolynomial(f.n(), 0));
  HomogeneousPolynomial current = f;
  for (int level = k; level >= 1; --level) {
    HomogeneousPolynomial q = solve_norm_laplacian(laplacian(current));
    out.components[level] = current - multiply_norm_power(q, 1);
    current = std::move(q);
  }
  out.components[0] = std::move(current);
  return out;
}

HomogeneousPolynomial reconstruct(const HarmonicExpansion& e) {
  if (static_cast<int>(e.components.size()) != e.k + 1) {
    throw std::invalid_argument("harmonic expansion must have k + 1 components");
  }
  HomogeneousPolynomial out(e.n, 2 * e.k);
  for (int j = 0; j <= e.k; ++j) {
    const auto& c = e.components[j];
    if (c.n() != e.n || c.degree() != 2 * j) {
      throw DegreeError("component " + std::to_string(j) +
                        " must be a form of degree " + std::to_string(2 * j));
    }
    out += multiply_norm_power(c, e.k - j);
  }
  return out;
}

double gegenbauer(int j, double alpha, double t) {
  if (j < 0) throw std::invalid_argument("gegenbauer: negative degree");
  if (!(alpha > 0.0)) throw std::invalid_argument("gegenbauer: alpha must be > 0");
  if (j == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * alpha * t;
  for (int i = 2; i <= j; ++i) {
    const double next =
        (2.0 * t * (i + alpha - 1.0) * cur - (i + 2.0 * alpha - 2.0) * prev) / i;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_coefficients(int j, double alpha) {
  if (j < 0) throw std::invalid_argument("gegenbauer: negative degree");
  if (!(alpha > 0.0)) throw std::invalid_argument("gegenbauer: alpha must be > 0");
  std::vector<double> prev{1.0};
  if (j == 0) return prev;
  std::vector<double> cur{0.0, 2.0 * alpha};
  for (int i = 2; i <= j; ++i) {
    std::vector<double> next(i + 1, 0.0);
    const double a = 2.0 * (i + alpha - 1.0) / i;
    const double b = (i + 2.0 * alpha - 2.0) / i;
    for (std::size_t m = 0; m < cur.size(); ++m) next[m + 1] += a * cur[m];
    for (std::size_t m = 0; m < prev.size(); ++m) next[m] -= b * prev[m];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double normalized_gegenbauer_scale(int n, int j) {
  const double alpha = gegenbauer_alpha(n);
  return static_cast<double>(harmonic_dim(n, j)) /
         (sphere_area(n) * gegenbauer(j, alpha, 1.0));
}

double normalized_gegenbauer(int n, int j, double t) {
  return normalized_gegenbauer_scale(n, j) * gegenbauer(j, gegenbauer_alpha(n), t);
}

std::vector<double> normalized_gegenbauer_coefficients(int n, int j) {
  std::vector<double> c = gegenbauer_coefficients(j, gegenbauer_alpha(n));
  const double scale = normalized_gegenbauer_scale(n, j);
  for (double& v : c) v *= scale;
  return c;
}

HomogeneousPolynomial zonal_harmonic(int n, int j, std::span<const double> y) {
  if (static_cast<int>(y.size()) != n) {
    throw DimensionError("zonal_harmonic: pole of dimension " +
                         std::to_string(y.size()) + ", expected " +
                         std::to_string(n));
  }
  double norm2 = 0.0;
  for (double v : y) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw std::invalid_argument("zonal_harmonic: pole is not a unit vector");
  }
  const std::vector<double> coef = normalized_gegenbauer_coefficients(n, j);
  const HomogeneousPolynomial linear = HomogeneousPolynomial::linear_form(y);
  HomogeneousPolynomial out(n, j);
  HomogeneousPolynomial power = HomogeneousPolynomial::constant(n, 1.0);
  for (int m = 0; m <= j; ++m) {
    if (m > 0) power = power * linear;
    if ((j - m) % 2 != 0 || coef[m] == 0.0) continue;
    out += multiply_norm_power(power, (j - m) / 2) * coef[m];
  }
  return out;
}

}  // namespace harmonia
