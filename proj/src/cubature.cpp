#include "harmonia/cubature.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "harmonia/detail/summation.hpp"
#include "harmonia/error.hpp"
#include "harmonia/linalg.hpp"

namespace harmonia {
namespace {

// Squared off-diagonal of the monic Gegenbauer recurrence,
// b_k = k (k + 2a) / ((2k + 2a + 1)(2k + 2a - 1)).
double recurrence_beta(int k, double alpha) {
  if (k == 1) return 1.0 / (2.0 * alpha + 3.0);
  const double kk = k;
  return kk * (kk + 2.0 * alpha) /
         ((2.0 * kk + 2.0 * alpha + 1.0) * (2.0 * kk + 2.0 * alpha - 1.0));
}

}  // namespace

double jacobi_weight_mass(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("weight exponent must be > -1");
  return std::exp(std::lgamma(0.5) + std::lgamma(alpha + 1.0) -
                  std::lgamma(alpha + 1.5));
}

Quadrature1D gauss_jacobi(int points, double alpha) {
  if (points < 1) throw std::invalid_argument("gauss_jacobi: points must be >= 1");
  const double mass = jacobi_weight_mass(alpha);
  const std::size_t m = static_cast<std::size_t>(points);

  std::vector<double> diag(m, 0.0);
  std::vector<double> off(m - 1);
  for (std::size_t k = 1; k < m; ++k) {
    off[k - 1] = std::sqrt(recurrence_beta(static_cast<int>(k), alpha));
  }
  SymmetricEigen eig;
  try {
    eig = tridiagonal_eigen(diag, off);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("gauss_jacobi(points=" + std::to_string(points) +
                           ", alpha=" + std::to_string(alpha) + "): " + e.what());
  }

  Quadrature1D q;
  q.alpha = alpha;
  q.nodes = eig.values;
  q.weights.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    q.weights[i] = eig.vectors(0, i) * eig.vectors(0, i);
  }
  // Enforce exact mirror symmetry: nodes and weights paired by i <-> m-1-i.
  for (std::size_t i = 0; i < m / 2; ++i) {
    const std::size_t j = m - 1 - i;
    const double z = 0.5 * (q.nodes[j] - q.nodes[i]);
    const double w = 0.5 * (q.weights[i] + q.weights[j]);
    q.nodes[i] = -z;
    q.nodes[j] = z;
    q.weights[i] = w;
    q.weights[j] = w;
  }
  if (m % 2 == 1) q.nodes[m / 2] = 0.0;

  detail::CompensatedSum total;
  for (std::size_t i = 0; i < m; ++i) total.add(q.weights[i]);
  const double scale = mass / total.value();
  for (double& w : q.weights) w *= scale;

  for (std::size_t i = 0; i < m; ++i) {
    if (!(q.weights[i] > 0.0) || !(std::abs(q.nodes[i]) < 1.0) ||
        (i > 0 && !(q.nodes[i] > q.nodes[i - 1]))) {
      throw ConvergenceError("gauss_jacobi(points=" + std::to_string(points) +
                             ", alpha=" + std::to_string(alpha) +
                             "): degenerate node/weight at index " +
                             std::to_string(i));
    }
  }
  return q;
}

CubatureRule::CubatureRule(int n, int algebraic_degree,
                           std::vector<double> nodes,
                           std::vector<double> weights)
    : n_(n),
      degree_(algebraic_degree),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)) {
  if (n < 2) throw std::invalid_argument("cubature rule needs n >= 2");
  if (algebraic_degree < 0) throw std::invalid_argument("negative rule degree");
  if (nodes_.size() != weights_.size() * static_cast<std::size_t>(n)) {
    throw DimensionError("cubature rule: " + std::to_string(nodes_.size()) +
                         " coordinates for " + std::to_string(weights_.size()) +
                         " weights in dimension " + std::to_string(n));
  }
}

CubatureRule circle_rule(int t) {
  if (t < 0) throw std::invalid_argument("circle_rule: t must be >= 0");
  // Angles (2i + 1) u with u = pi / (2(t+1)); a quarter turn is t + 1 units.
  // Each angle is reduced to the first quadrant so that mirrored vertices get
  // bitwise-identical coordinates up to sign.
  const int quarter = t + 1;
  const int count = 2 * (t + 1);
  const double unit = std::numbers::pi / (2.0 * quarter);
  std::vector<double> nodes;
  nodes.reserve(2 * static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int a = 2 * i + 1;
    int reduced = 0;
    double sx = 1.0;
    double sy = 1.0;
    if (a <= quarter) {
      reduced = a;
    } else if (a <= 2 * quarter) {
      reduced = 2 * quarter - a;
      sx = -1.0;
    } else if (a <= 3 * quarter) {
      reduced = a - 2 * quarter;
      sx = -1.0;
      sy = -1.0;
    } else {
      reduced = 4 * quarter - a;
      sy = -1.0;
    }
    const double c = reduced == quarter ? 0.0 : std::cos(reduced * unit);
    const double s = reduced == 0 ? 0.0 : std::sin(reduced * unit);
    nodes.push_back(sx * c);
    nodes.push_back(sy * s);
  }
  std::vector<double> weights(count, std::numbers::pi / (t + 1));
  return {2, 2 * t, std::move(nodes), std::move(weights)};
}

CubatureRule product_cubature(int n, int t) {
  if (n < 2) throw std::invalid_argument("product_cubature: n must be >= 2");
  if (t < 0) throw std::invalid_argument("product_cubature: t must be >= 0");
  CubatureRule rule = circle_rule(t);
  for (int m = 3; m <= n; ++m) {
    const Quadrature1D gauss = gauss_jacobi(t + 1, (m - 3) / 2.0);
    const std::size_t inner = rule.size();
    std::vector<double> nodes;
    std::vector<double> weights;
    nodes.reserve(gauss.nodes.size() * inner * m);
    weights.reserve(gauss.nodes.size() * inner);
    for (std::size_t a = 0; a < gauss.nodes.size(); ++a) {
      const double z = gauss.nodes[a];
      assert(std::abs(z) < 1.0);
      const double r = std::sqrt((1.0 - z) * (1.0 + z));
      for (std::size_t b = 0; b < inner; ++b) {
        nodes.push_back(z);
        for (double y : rule.node(b)) nodes.push_back(r * y);
        weights.push_back(gauss.weights[a] * rule.weights()[b]);
      }
    }
    rule = CubatureRule(m, 2 * t, std::move(nodes), std::move(weights));
  }
  return rule;
}

std::shared_ptr<const CubatureRule> cached_product_cubature(int n, int t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const CubatureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, t}];
  if (!slot) slot = std::make_shared<const CubatureRule>(product_cubature(n, t));
  return slot;
}

double verify_exactness(const CubatureRule& rule, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  double worst = 0.0;
  for (const Exponent& e : monomial_exponents(rule.n(), degree)) {
    HomogeneousPolynomial::TermMap t;
    t.emplace(e, 1.0);
    const double approx = integrate(rule, {rule.n(), degree, std::move(t)});
    const double exact = sphere_monomial_integral(e);
    const double residual = exact != 0.0 ? std::abs(approx - exact) / exact
                                         : std::abs(approx);
    worst = std::max(worst, residual);
  }
  return worst;
}

double integrate(const CubatureRule& rule, const HomogeneousPolynomial& f) {
  const std::vector<double> values = evaluate_on_nodes(f, rule);
  const auto w = rule.weights();
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < values.size(); ++i) sum.add(w[i] * values[i]);
  return sum.value();
}

std::vector<double> evaluate_on_nodes(const HomogeneousPolynomial& f,
                                      const CubatureRule& rule) {
  const int n = f.n();
  if (n != rule.n()) {
    throw DimensionError("polynomial in " + std::to_string(n) +
                         " variables against a rule on S^" +
                         std::to_string(rule.n() - 1));
  }
  const int d = f.degree();
  const std::size_t stride = static_cast<std::size_t>(d) + 1;
  std::vector<int> exps;
  std::vector<double> coefs;
  exps.reserve(f.size() * n);
  coefs.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    exps.insert(exps.end(), e.begin(), e.end());
    coefs.push_back(c);
  }
  std::vector<double> out(rule.size());
  std::vector<double> powers(static_cast<std::size_t>(n) * stride);
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const auto x = rule.node(p);
    for (int i = 0; i < n; ++i) {
      double v = 1.0;
      for (std::size_t a = 0; a < stride; ++a) {
        powers[i * stride + a] = v;
        v *= x[i];
      }
    }
    double sum = 0.0;
    for (std::size_t term = 0; term < coefs.size(); ++term) {
      double v = coefs[term];
      for (int i = 0; i < n; ++i) v *= powers[i * stride + exps[term * n + i]];
      sum += v;
    }
    out[p] = sum;
  }
  return out;
}

}  // namespace harmonia
