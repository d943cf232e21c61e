#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "harmonia/linalg.hpp"

namespace harmonia {

enum class KernelKind { kPower, kFangFawzi };

std::string_view to_string(KernelKind kind);
/// Accepts "power" and "fangfawzi"; throws std::invalid_argument otherwise.
KernelKind parse_kernel_kind(std::string_view name);

/// Even kernel h(t) = sum_j lambda_{2j} g_{2j}(t) in the normalized
/// Gegenbauer basis on S^{n-1}. The coefficients are the eigenvalues of the
/// averaging operator on the harmonic components.
class GegenbauerKernel {
 public:
  /// lambdas = (lambda_0, lambda_2, ..., lambda_{2s}); s = lambdas.size() - 1.
  GegenbauerKernel(int n, std::vector<double> lambdas);

  /// Kernel with every lambda_{2j} = 1 for j <= s.
  static GegenbauerKernel identity(int n, int s);

  int n() const noexcept { return n_; }
  int s() const noexcept { return static_cast<int>(lambdas_.size()) - 1; }
  std::span<const double> lambdas() const noexcept { return lambdas_; }
  /// lambda_{2j}; zero beyond the kernel degree.
  double lambda(int j) const noexcept {
    return j >= 0 && j <= s() ? lambdas_[j] : 0.0;
  }

  /// h(t).
  double operator()(double t) const;

 private:
  int n_;
  std::vector<double> lambdas_;
};

struct FangFawziSolution {
  GegenbauerKernel kernel;
  /// sum_{j<=k} (1 - lambda_{2j}).
  double rho = 0.0;
  /// Largest eigenvalue of T_{2k,s}.
  double eigenvalue = 0.0;
  /// Unit eigenvector e* for `eigenvalue` (size s + 1).
  std::vector<double> eigenvector;
  /// q_s(t) = sum_j eta_j g_j(t) with h = q_s^2 (size s + 1).
  std::vector<double> eta;
};

/// Coefficients of an even polynomial h(t) = sum_m coefficients[m] t^m in
/// the basis g_0, g_2, ... computed by Gauss-Jacobi orthogonal projection.
/// Throws std::invalid_argument if some odd coefficient is nonzero.
GegenbauerKernel gegenbauer_expand(std::span<const double> coefficients, int n);

/// Monomial coefficients of t^{2s} / integral_S y_1^{2s} dmu(y).
std::vector<double> power_kernel_polynomial(int n, int s);

/// Closed-form coefficients of the pure-power kernel:
/// lambda_{2j} = s! Gamma((2s+n)/2) / ((s-j)! Gamma((2s+2j+n)/2)).
GegenbauerKernel power_kernel(int n, int s);

/// (s+1)x(s+1) matrix of integral g_i g_j g_ell w over [-1, 1], with
/// w(t) = (1 - t^2)^{(n-3)/2}.
Matrix toeplitz_matrix(int n, int ell, int s);

/// Kernel h = q^2, deg q = s, maximizing sum_{j=1..k} lambda_{2j} subject to
/// lambda_0 = 1, from the top eigenpair of the symmetrized matrix
/// T = (1/k) sum_{j=1..k} (nu_0 / nu_{2j}) A_0^{-1/2} A_{2j} A_0^{-1/2}
/// with nu_l = integral g_l^2 w. Requires 1 <= k <= s.
FangFawziSolution fang_fawzi_kernel(int n, int k, int s);

/// tau_{2k}(h) = sqrt(sum_{j<=k} dim(H_{2j}) (1/lambda_{2j} - 1)^2).
/// Throws SingularKernelError if |lambda_{2j}| <= 1e-12 for some j <= k.
double frobenius_threshold(const GegenbauerKernel& kernel, int k);

/// Builds the kernel of the given family at half-degree s for forms of
/// degree 2k.
GegenbauerKernel make_kernel(KernelKind kind, int n, int k, int s);

/// Threshold below which a lambda is treated as zero.
inline constexpr double kSingularLambda = 1e-12;

}  // namespace harmonia
