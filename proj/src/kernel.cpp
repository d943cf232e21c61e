#include "harmonia/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "harmonia/cubature.hpp"
#include "harmonia/error.hpp"
#include "harmonia/harmonic.hpp"

namespace harmonia {
namespace {

double weight_exponent(int n) {
  if (n < 3) throw std::invalid_argument("kernels need n >= 3");
  return (n - 3) / 2.0;
}

// values[i][p] = g_i(z_p) for i <= max_degree.
std::vector<std::vector<double>> gegenbauer_table(int n, int max_degree,
                                                  std::span<const double> z) {
  std::vector<std::vector<double>> values(max_degree + 1,
                                          std::vector<double>(z.size()));
  for (int i = 0; i <= max_degree; ++i) {
    for (std::size_t p = 0; p < z.size(); ++p) {
      values[i][p] = normalized_gegenbauer(n, i, z[p]);
    }
  }
  return values;
}

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kPower:
      return "power";
    case KernelKind::kFangFawzi:
      return "fangfawzi";
  }
  return "unknown";
}

KernelKind parse_kernel_kind(std::string_view name) {
  if (name == "power") return KernelKind::kPower;
  if (name == "fangfawzi") return KernelKind::kFangFawzi;
  throw std::invalid_argument("unknown kernel kind '" + std::string(name) +
                              "' (expected power|fangfawzi)");
}

GegenbauerKernel::GegenbauerKernel(int n, std::vector<double> lambdas)
    : n_(n), lambdas_(std::move(lambdas)) {
  if (n < 3) throw std::invalid_argument("kernels need n >= 3");
  if (lambdas_.empty()) throw std::invalid_argument("kernel needs lambda_0");
}

GegenbauerKernel GegenbauerKernel::identity(int n, int s) {
  return {n, std::vector<double>(static_cast<std::size_t>(s) + 1, 1.0)};
}

double GegenbauerKernel::operator()(double t) const {
  double h = 0.0;
  for (int j = 0; j <= s(); ++j) h += lambdas_[j] * normalized_gegenbauer(n_, 2 * j, t);
  return h;
}

GegenbauerKernel gegenbauer_expand(std::span<const double> coefficients, int n) {
  std::size_t len = coefficients.size();
  while (len > 0 && coefficients[len - 1] == 0.0) --len;
  for (std::size_t m = 1; m < len; m += 2) {
    if (coefficients[m] != 0.0) {
      throw std::invalid_argument("gegenbauer_expand: coefficient of t^" +
                                  std::to_string(m) + " is nonzero");
    }
  }
  const int s = len == 0 ? 0 : static_cast<int>(len - 1) / 2;
  const Quadrature1D rule = gauss_jacobi(2 * s + 1, weight_exponent(n));
  const auto g = gegenbauer_table(n, 2 * s, rule.nodes);

  std::vector<double> h(rule.nodes.size(), 0.0);
  for (std::size_t p = 0; p < h.size(); ++p) {
    for (std::size_t m = len; m-- > 0;) h[p] = h[p] * rule.nodes[p] + coefficients[m];
  }
  std::vector<double> lambdas(s + 1);
  for (int j = 0; j <= s; ++j) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t p = 0; p < h.size(); ++p) {
      num += rule.weights[p] * h[p] * g[2 * j][p];
      den += rule.weights[p] * g[2 * j][p] * g[2 * j][p];
    }
    lambdas[j] = num / den;
  }
  return {n, std::move(lambdas)};
}

std::vector<double> power_kernel_polynomial(int n, int s) {
  if (s < 0) throw std::invalid_argument("power kernel: s must be >= 0");
  std::vector<int> e(n, 0);
  e[0] = 2 * s;
  std::vector<double> coefficients(2 * static_cast<std::size_t>(s) + 1, 0.0);
  coefficients.back() = 1.0 / sphere_monomial_integral(e);
  return coefficients;
}

GegenbauerKernel power_kernel(int n, int s) {
  if (s < 0) throw std::invalid_argument("power kernel: s must be >= 0");
  std::vector<double> lambdas(s + 1);
  const double common = std::lgamma(s + 1.0) + std::lgamma((2.0 * s + n) / 2.0);
  for (int j = 0; j <= s; ++j) {
    lambdas[j] = std::exp(common - std::lgamma(s - j + 1.0) -
                          std::lgamma((2.0 * s + 2.0 * j + n) / 2.0));
  }
  lambdas[0] = 1.0;
  return {n, std::move(lambdas)};
}

Matrix toeplitz_matrix(int n, int ell, int s) {
  if (ell < 0 || s < 0) throw std::invalid_argument("toeplitz_matrix: negative index");
  const Quadrature1D rule = gauss_jacobi(s + (ell + 1) / 2 + 1, weight_exponent(n));
  const auto g = gegenbauer_table(n, std::max(s, ell), rule.nodes);
  Matrix a(s + 1, s + 1);
  for (int i = 0; i <= s; ++i) {
    for (int j = 0; j <= i; ++j) {
      double v = 0.0;
      for (std::size_t p = 0; p < rule.nodes.size(); ++p) {
        v += rule.weights[p] * g[i][p] * g[j][p] * g[ell][p];
      }
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

FangFawziSolution fang_fawzi_kernel(int n, int k, int s) {
  if (k < 1) throw std::invalid_argument("fang_fawzi_kernel: k must be >= 1");
  if (s < k) {
    throw SingularKernelError(
        2 * (s + 1), "fang_fawzi_kernel: s = " + std::to_string(s) +
                         " < k = " + std::to_string(k) +
                         " leaves lambda_" + std::to_string(2 * (s + 1)) + " = 0");
  }
  const std::size_t dim = static_cast<std::size_t>(s) + 1;
  // Exact for the degree-4s integrands g_i g_j g_l and g_l^2, l <= 2s.
  const Quadrature1D rule = gauss_jacobi(2 * s + 1, weight_exponent(n));
  const auto g = gegenbauer_table(n, 2 * s, rule.nodes);
  const std::size_t points = rule.nodes.size();

  std::vector<double> nu(2 * dim - 1);
  for (std::size_t l = 0; l < nu.size(); ++l) {
    double v = 0.0;
    for (std::size_t p = 0; p < points; ++p) v += rule.weights[p] * g[l][p] * g[l][p];
    nu[l] = v;
  }

  const Matrix a0 = toeplitz_matrix(n, 0, s);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(a0(i, i) > 0.0)) {
      throw Error("fang_fawzi_kernel: A_0 has non-positive diagonal entry " +
                  std::to_string(i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(a0(i, j)) > 1e-10 * std::sqrt(a0(i, i) * a0(j, j))) {
        throw Error("fang_fawzi_kernel: A_0 is not diagonal at (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  std::vector<double> inv_sqrt(dim);
  for (std::size_t i = 0; i < dim; ++i) inv_sqrt[i] = 1.0 / std::sqrt(a0(i, i));

  Matrix t(dim, dim);
  for (int j = 1; j <= k; ++j) {
    const Matrix a = toeplitz_matrix(n, 2 * j, s);
    const double c = nu[0] / nu[2 * j] / k;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t col = 0; col < dim; ++col) {
        t(r, col) += c * inv_sqrt[r] * a(r, col) * inv_sqrt[col];
      }
    }
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t col = r + 1; col < dim; ++col) {
      const double v = 0.5 * (t(r, col) + t(col, r));
      t(r, col) = v;
      t(col, r) = v;
    }
  }

  const SymmetricEigen eig = jacobi_eigen(t);
  FangFawziSolution out{GegenbauerKernel(n, {1.0}), 0.0, eig.values.back(), {}, {}};
  out.eigenvector.resize(dim);
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    out.eigenvector[i] = eig.vectors(i, dim - 1);
    if (std::abs(out.eigenvector[i]) > std::abs(out.eigenvector[pivot])) pivot = i;
  }
  if (out.eigenvector[pivot] < 0.0) {
    for (double& v : out.eigenvector) v = -v;
  }

  out.eta.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out.eta[i] = std::sqrt(nu[0]) * inv_sqrt[i] * out.eigenvector[i];
  }
  std::vector<double> q(points, 0.0);
  for (std::size_t p = 0; p < points; ++p) {
    for (std::size_t i = 0; i < dim; ++i) q[p] += out.eta[i] * g[i][p];
  }
  std::vector<double> lambdas(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    double v = 0.0;
    for (std::size_t p = 0; p < points; ++p) {
      v += rule.weights[p] * q[p] * q[p] * g[2 * j][p];
    }
    lambdas[j] = v / nu[2 * j];
  }
  const double lambda0 = lambdas[0];
  if (!(lambda0 > 0.0)) {
    throw Error("fang_fawzi_kernel: degenerate eigenvector (lambda_0 = " +
                std::to_string(lambda0) + ")");
  }
  for (double& v : lambdas) v /= lambda0;
  lambdas[0] = 1.0;
  for (double& v : out.eta) v /= std::sqrt(lambda0);

  for (int j = 0; j <= k; ++j) out.rho += 1.0 - lambdas[j];
  out.kernel = GegenbauerKernel(n, std::move(lambdas));
  return out;
}

double frobenius_threshold(const GegenbauerKernel& kernel, int k) {
  if (k < 0) throw std::invalid_argument("frobenius_threshold: negative k");
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double lambda = kernel.lambda(j);
    if (std::abs(lambda) <= kSingularLambda) {
      throw SingularKernelError(
          2 * j, "kernel is singular in degree " + std::to_string(2 * k) +
                     ": lambda_" + std::to_string(2 * j) + " vanishes");
    }
    const double d = 1.0 / lambda - 1.0;
    sum += static_cast<double>(harmonic_dim(kernel.n(), 2 * j)) * d * d;
  }
  return std::sqrt(sum);
}

GegenbauerKernel make_kernel(KernelKind kind, int n, int k, int s) {
  switch (kind) {
    case KernelKind::kPower:
      return power_kernel(n, s);
    case KernelKind::kFangFawzi:
      return fang_fawzi_kernel(n, k, s).kernel;
  }
  throw std::invalid_argument("unknown kernel kind");
}

}  // namespace harmonia
