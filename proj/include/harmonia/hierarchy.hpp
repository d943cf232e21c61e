#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "harmonia/cubature.hpp"
#include "harmonia/kernel.hpp"
#include "harmonia/polynomial.hpp"

namespace harmonia {

/// One level of a harmonic hierarchy for a degree-2k form.
struct BoundResult {
  int s = 0;
  KernelKind kernel_kind = KernelKind::kPower;
  double tau = 0.0;
  /// Optimization-free lower bound (min over nodes of the inverse-averaged
  /// form); -inf when the level's kernel is singular.
  double lower = 0.0;
  /// Minimum of the form over the nodes of this level's rule and of every
  /// earlier level in the same sweep. The rules are not nested, so the plain
  /// per-rule minimum oscillates with the parity of k + s.
  double upper = 0.0;
  /// Nodes in the rule used for `lower`.
  std::size_t cubature_size = 0;
  double elapsed_ms = 0.0;
};

/// Point y of the level rule with the representer of the functional
/// f -> Gamma_h(f)(y) in the L2(S) pairing.
struct DualGenerator {
  std::vector<double> node;
  HomogeneousPolynomial representer;
};

/// lambda_0 ||x||^{2k} f_0 + lambda_2 ||x||^{2k-2} f_2 + ... (components past
/// the kernel degree are dropped).
HomogeneousPolynomial apply_gamma(const HomogeneousPolynomial& f,
                                  const GegenbauerKernel& kernel);

/// Inverse of apply_gamma on forms of degree 2k. Throws SingularKernelError
/// naming the first vanishing lambda_{2j}, j <= k.
HomogeneousPolynomial apply_gamma_inverse(const HomogeneousPolynomial& f,
                                          const GegenbauerKernel& kernel);

/// sum_{z in X} W(z) h(<x, z>) f(z): the averaging operator evaluated at the
/// unit vector x by direct convolution. Requires rule degree >= 2(k + s).
double convolve_on_nodes(const HomogeneousPolynomial& f,
                         const GegenbauerKernel& kernel,
                         const CubatureRule& rule, std::span<const double> x);

/// Optimization-free lower bound on min_S f: the minimum over the nodes of
/// `rule` of apply_gamma_inverse(f). Requires lambda_0 = 1, an invertible
/// kernel through degree 2k and rule degree >= 2(k + s).
double lower_bound(const HomogeneousPolynomial& f,
                   const GegenbauerKernel& kernel, const CubatureRule& rule);

/// Minimum of f over the rule nodes; never below min_S f. Values whose sign
/// is in doubt are evaluated with evaluate_refined.
double upper_bound(const HomogeneousPolynomial& f, const CubatureRule& rule);

/// True iff min_X f > tau_{2k}(h) / sqrt(mu(S)) * ||f||_2, which certifies
/// that f lies in the level's polyhedral cone. ||f||_2 uses the product rule
/// of degree exactly 4k.
bool certify_membership(const HomogeneousPolynomial& f,
                        const GegenbauerKernel& kernel,
                        const CubatureRule& rule);

/// Representer sum_j lambda_{2j} ||x||^{2(k-j)} phi_y^{2j}(x).
DualGenerator moment_generator(int k, const GegenbauerKernel& kernel,
                               std::span<const double> y);

/// One generator per node of the level rule (degree >= 2(k + s)).
std::vector<DualGenerator> moment_generators(int k,
                                             const GegenbauerKernel& kernel,
                                             const CubatureRule& rule);

struct LevelError {
  int s = 0;
  std::string message;
};

struct SweepOptions {
  /// Record wall-clock time per level; off by default so repeated sweeps are
  /// bit-identical.
  bool measure_time = false;
  /// Supplies the product rule of degree 2t on S^{n-1}; defaults to
  /// cached_product_cubature.
  std::function<std::shared_ptr<const CubatureRule>(int n, int t)> rule_source;
  /// Compute every lower bound on the single rule of degree 2(k + s_max).
  /// One node set for all levels makes the lower bounds nondecreasing in s;
  /// with per-level rules they jitter because the node sets are not nested.
  /// Upper bounds still use the per-level rules.
  bool shared_rule = false;
};

struct SweepReport {
  std::vector<BoundResult> levels;
  /// Levels whose kernel could not be built or inverted. They still appear in
  /// `levels` with tau = +inf and lower = -inf.
  std::vector<LevelError> errors;

  bool ok() const noexcept { return errors.empty(); }
};

/// Bounds for every s in [s_min, s_max] using per-level product rules of
/// degree 2(k + s), or one shared rule when options.shared_rule is set. An empty range (s_min > s_max) yields an empty report.
SweepReport sweep(const HomogeneousPolynomial& f, KernelKind kind, int s_min,
                  int s_max, const SweepOptions& options = {});

}  // namespace harmonia
