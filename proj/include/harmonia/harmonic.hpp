#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "harmonia/polynomial.hpp"

namespace harmonia {

/// Dimension of the space H_j of harmonic forms of degree j in n variables:
/// C(n+j-1, j) - C(n+j-3, j-2).
std::int64_t harmonic_dim(int n, int j);

/// f = sum_j ||x||^{2(k-j)} f_{2j} with every f_{2j} harmonic of degree 2j.
struct HarmonicExpansion {
  int n = 0;
  int k = 0;
  /// components[j] holds f_{2j}; size k + 1.
  std::vector<HomogeneousPolynomial> components;
};

/// Unique harmonic decomposition of an even-degree form. Throws DegreeError
/// for odd degree.
///
/// The top component is f - ||x||^2 q where q solves
/// Laplacian(||x||^2 q) = Laplacian(f); the same step is then applied to q.
/// The solve is a back-substitution over the Laplacian powers of q, from
/// the highest nonzero one down.
HarmonicExpansion harmonic_decompose(const HomogeneousPolynomial& f);

/// sum_j ||x||^{2(k-j)} components[j].
HomogeneousPolynomial reconstruct(const HarmonicExpansion& e);

/// Gegenbauer polynomial C_j^{(alpha)}(t) by the three-term recursion.
double gegenbauer(int j, double alpha, double t);

/// Monomial coefficients c[0..j] of C_j^{(alpha)}(t) = sum_m c[m] t^m.
std::vector<double> gegenbauer_coefficients(int j, double alpha);

/// dim(H_j) / (mu(S) C_j^{(alpha)}(1)) with alpha = (n - 2) / 2.
double normalized_gegenbauer_scale(int n, int j);

/// g_j(t): the Gegenbauer polynomial scaled so that g_j(<x, y>) is the
/// reproducing kernel of H_j on the sphere. Requires n >= 3.
double normalized_gegenbauer(int n, int j, double t);

/// Monomial coefficients of g_j(t).
std::vector<double> normalized_gegenbauer_coefficients(int n, int j);

/// Zonal harmonic phi_y^j: the degree-j harmonic form representing point
/// evaluation at the unit vector y on H_j. Throws std::invalid_argument if
/// |y| differs from 1 by more than 1e-12.
HomogeneousPolynomial zonal_harmonic(int n, int j, std::span<const double> y);

}  // namespace harmonia
