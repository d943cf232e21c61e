#include "harmonia/hierarchy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "harmonia/detail/summation.hpp"
#include "harmonia/error.hpp"
#include "harmonia/harmonic.hpp"

namespace harmonia {
namespace {

int half_degree(const HomogeneousPolynomial& f) {
  if (f.degree() % 2 != 0) {
    throw DegreeError("harmonic hierarchies need an even-degree form, got degree " +
                      std::to_string(f.degree()));
  }
  return f.degree() / 2;
}

void check_kernel_dimension(const HomogeneousPolynomial& f,
                            const GegenbauerKernel& kernel) {
  if (f.n() != kernel.n()) {
    throw DimensionError("form in " + std::to_string(f.n()) +
                         " variables with a kernel for n = " +
                         std::to_string(kernel.n()));
  }
}

void check_rule_degree(const CubatureRule& rule, int required,
                       const char* what) {
  if (rule.algebraic_degree() < required) {
    throw DegreeError(std::string(what) + " needs a cubature rule of degree >= " +
                      std::to_string(required) + ", got " +
                      std::to_string(rule.algebraic_degree()));
  }
}

void check_invertible(const GegenbauerKernel& kernel, int k) {
  for (int j = 0; j <= k; ++j) {
    if (std::abs(kernel.lambda(j)) <= kSingularLambda) {
      throw SingularKernelError(
          2 * j, "averaging operator is singular in degree " +
                     std::to_string(2 * k) + ": lambda_" +
                     std::to_string(2 * j) + " vanishes");
    }
  }
}

HomogeneousPolynomial scale_components(const HomogeneousPolynomial& f,
                                       const GegenbauerKernel& kernel,
                                       bool inverse) {
  HarmonicExpansion e = harmonic_decompose(f);
  for (int j = 0; j <= e.k; ++j) {
    const double lambda = kernel.lambda(j);
    e.components[j] *= inverse ? 1.0 / lambda : lambda;
  }
  return reconstruct(e);
}

double min_over_nodes(const HomogeneousPolynomial& f, const CubatureRule& rule) {
  const std::vector<double> values = evaluate_on_nodes(f, rule);
  if (values.empty()) throw std::invalid_argument("empty cubature rule");
  return *std::min_element(values.begin(), values.end());
}

}  // namespace

HomogeneousPolynomial apply_gamma(const HomogeneousPolynomial& f,
                                  const GegenbauerKernel& kernel) {
  half_degree(f);
  check_kernel_dimension(f, kernel);
  return scale_components(f, kernel, false);
}

HomogeneousPolynomial apply_gamma_inverse(const HomogeneousPolynomial& f,
                                          const GegenbauerKernel& kernel) {
  const int k = half_degree(f);
  check_kernel_dimension(f, kernel);
  check_invertible(kernel, k);
  return scale_components(f, kernel, true);
}

double convolve_on_nodes(const HomogeneousPolynomial& f,
                         const GegenbauerKernel& kernel,
                         const CubatureRule& rule, std::span<const double> x) {
  const int k = half_degree(f);
  check_kernel_dimension(f, kernel);
  check_rule_degree(rule, 2 * (k + kernel.s()), "convolution");
  if (static_cast<int>(x.size()) != rule.n()) {
    throw DimensionError("convolution point has the wrong dimension");
  }
  const std::vector<double> values = evaluate_on_nodes(f, rule);
  const auto w = rule.weights();
  detail::CompensatedSum sum;
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const auto z = rule.node(p);
    double t = 0.0;
    for (int i = 0; i < rule.n(); ++i) t += x[i] * z[i];
    sum.add(w[p] * kernel(t) * values[p]);
  }
  return sum.value();
}

double lower_bound(const HomogeneousPolynomial& f,
                   const GegenbauerKernel& kernel, const CubatureRule& rule) {
  const int k = half_degree(f);
  check_kernel_dimension(f, kernel);
  if (std::abs(kernel.lambda(0) - 1.0) > 1e-10) {
    throw std::invalid_argument("lower_bound needs a kernel with lambda_0 = 1, got " +
                                std::to_string(kernel.lambda(0)));
  }
  check_rule_degree(rule, 2 * (k + kernel.s()), "lower_bound");
  return min_over_nodes(apply_gamma_inverse(f, kernel), rule);
}

double upper_bound(const HomogeneousPolynomial& f, const CubatureRule& rule) {
  if (f.n() != rule.n()) {
    throw DimensionError("upper_bound: form in " + std::to_string(f.n()) +
                         " variables with a rule on S^" + std::to_string(rule.n() - 1));
  }
  if (rule.size() == 0) throw std::invalid_argument("empty cubature rule");
  // Node values near zero are recomputed in wide precision, so a form that is
  // nonnegative at a node never reports a negative value there.
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < rule.size(); ++p) {
    best = std::min(best, evaluate_refined(f, rule.node(p)));
  }
  return best;
}

bool certify_membership(const HomogeneousPolynomial& f,
                        const GegenbauerKernel& kernel,
                        const CubatureRule& rule) {
  const int k = half_degree(f);
  check_kernel_dimension(f, kernel);
  check_rule_degree(rule, 2 * (k + kernel.s()), "certify_membership");
  const double tau = frobenius_threshold(kernel, k);
  const double norm = l2_norm(f, *cached_product_cubature(f.n(), 2 * k));
  const double threshold = tau / std::sqrt(sphere_area(f.n())) * norm;
  const bool certified = min_over_nodes(f, rule) > threshold;
  if (certified && !(lower_bound(f, kernel, rule) > 0.0)) {
    throw std::logic_error(
        "certify_membership: certificate holds but the inverse-averaged form "
        "is not positive on the nodes");
  }
  return certified;
}

DualGenerator moment_generator(int k, const GegenbauerKernel& kernel,
                               std::span<const double> y) {
  if (k < 0) throw std::invalid_argument("moment_generator: negative k");
  const int n = kernel.n();
  check_invertible(kernel, k);
  HomogeneousPolynomial rep(n, 2 * k);
  for (int j = 0; j <= k; ++j) {
    rep += multiply_norm_power(zonal_harmonic(n, 2 * j, y), k - j) *
           kernel.lambda(j);
  }
  return {std::vector<double>(y.begin(), y.end()), std::move(rep)};
}

std::vector<DualGenerator> moment_generators(int k,
                                             const GegenbauerKernel& kernel,
                                             const CubatureRule& rule) {
  if (rule.n() != kernel.n()) {
    throw DimensionError("moment_generators: rule and kernel dimensions differ");
  }
  check_rule_degree(rule, 2 * (k + kernel.s()), "moment_generators");
  std::vector<DualGenerator> out;
  out.reserve(rule.size());
  for (std::size_t p = 0; p < rule.size(); ++p) {
    out.push_back(moment_generator(k, kernel, rule.node(p)));
  }
  return out;
}

SweepReport sweep(const HomogeneousPolynomial& f, KernelKind kind, int s_min,
                  int s_max, const SweepOptions& options) {
  const int k = half_degree(f);
  SweepReport report;
  if (s_min > s_max) return report;
  if (s_min < 0) throw std::invalid_argument("sweep: s_min must be >= 0");
  auto rule_source = options.rule_source;
  if (!rule_source) rule_source = cached_product_cubature;

  std::shared_ptr<const CubatureRule> shared;
  if (options.shared_rule) shared = rule_source(f.n(), k + s_max);

  double best_upper = std::numeric_limits<double>::infinity();
  for (int s = s_min; s <= s_max; ++s) {
    const auto start = std::chrono::steady_clock::now();
    BoundResult level;
    level.s = s;
    level.kernel_kind = kind;
    const auto own = rule_source(f.n(), k + s);
    const auto rule = shared ? shared : own;
    level.cubature_size = rule->size();
    best_upper = std::min(best_upper, upper_bound(f, *own));
    level.upper = best_upper;
    try {
      const GegenbauerKernel kernel = make_kernel(kind, f.n(), k, s);
      level.tau = frobenius_threshold(kernel, k);
      level.lower = f.is_zero() ? 0.0 : lower_bound(f, kernel, *rule);
    } catch (const Error& e) {
      level.tau = std::numeric_limits<double>::infinity();
      level.lower = -std::numeric_limits<double>::infinity();
      report.errors.push_back({s, "level s=" + std::to_string(s) + ": " + e.what()});
    }
    if (options.measure_time) {
      level.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    }
    report.levels.push_back(level);
  }
  return report;
}

}  // namespace harmonia
