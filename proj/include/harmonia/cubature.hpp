#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "harmonia/polynomial.hpp"

namespace harmonia {

/// Gauss rule on [-1, 1] for the weight (1 - s^2)^alpha.
struct Quadrature1D {
  double alpha = 0.0;
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive, w(-z) == w(z) bitwise
};

/// Integral of (1 - s^2)^alpha over [-1, 1], i.e. Beta(1/2, alpha + 1).
double jacobi_weight_mass(double alpha);

/// Golub-Welsch: eigenvalues of the symmetric Jacobi matrix of the
/// Gegenbauer recurrence are the nodes, squared first eigenvector
/// components times the total mass are the weights. Exact for polynomials of
/// degree <= 2 * points - 1.
Quadrature1D gauss_jacobi(int points, double alpha);

/// Weighted node set on the unit sphere S^{n-1}.
class CubatureRule {
 public:
  /// `nodes` is row-major with n entries per node.
  CubatureRule(int n, int algebraic_degree, std::vector<double> nodes,
               std::vector<double> weights);

  int n() const noexcept { return n_; }
  int algebraic_degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return weights_.size(); }

  std::span<const double> node(std::size_t i) const {
    return {nodes_.data() + i * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  int n_;
  int degree_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Vertices of the regular 2(t+1)-gon on S^1 with weights pi / (t + 1).
/// The polygon is rotated by half a step, so no vertex lies on a coordinate
/// axis.
CubatureRule circle_rule(int t);

/// Sign-change invariant product rule of algebraic degree 2t on S^{n-1}
/// with 2(t+1)^{n-1} nodes: (z, sqrt(1 - z^2) y) over Gauss-Jacobi nodes z
/// (t + 1 points, weight exponent (n - 3) / 2) and nodes y of the rule on
/// S^{n-2}.
CubatureRule product_cubature(int n, int t);

/// Process-wide memoized product_cubature. Thread-safe.
std::shared_ptr<const CubatureRule> cached_product_cubature(int n, int t);

/// Maximum residual of the rule over all monomials of total degree
/// `degree`: relative for monomials with nonzero integral, absolute for the
/// others.
double verify_exactness(const CubatureRule& rule, int degree);

/// Weighted node sum of f (compensated, fixed order).
double integrate(const CubatureRule& rule, const HomogeneousPolynomial& f);

/// f evaluated at every node, in node order.
std::vector<double> evaluate_on_nodes(const HomogeneousPolynomial& f,
                                      const CubatureRule& rule);

}  // namespace harmonia
