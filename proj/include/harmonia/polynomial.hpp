#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

namespace harmonia {

class CubatureRule;

/// Exponent vector of a monomial x1^a1 ... xn^an.
using Exponent = std::vector<int>;

/// Sparse homogeneous polynomial (a form) in n variables.
///
/// Every stored exponent sums to `degree()` and no stored coefficient is
/// exactly zero, so two forms with the same terms compare equal. Instances
/// are immutable apart from the compound assignment operators.
class HomogeneousPolynomial {
 public:
  using TermMap = std::map<Exponent, double>;

  /// Zero form of the given degree.
  HomogeneousPolynomial(int n, int degree);
  /// Throws DegreeError if some exponent does not sum to `degree`.
  HomogeneousPolynomial(int n, int degree, TermMap terms);

  static HomogeneousPolynomial constant(int n, double value);
  /// ||x||^{2m} expanded into monomials.
  static HomogeneousPolynomial norm_power(int n, int m);
  /// <y, x> as a linear form in x.
  static HomogeneousPolynomial linear_form(std::span<const double> y);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  double coefficient(const Exponent& e) const;
  /// Largest absolute coefficient; 0 for the zero form.
  double max_abs_coefficient() const;

  double operator()(std::span<const double> x) const;

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& other);
  HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& other);
  HomogeneousPolynomial& operator*=(double c);

  friend bool operator==(const HomogeneousPolynomial&,
                         const HomogeneousPolynomial&) = default;

 private:
  void add_scaled(const HomogeneousPolynomial& other, double c);

  int n_;
  int degree_;
  TermMap terms_;
};

HomogeneousPolynomial operator+(HomogeneousPolynomial a,
                                const HomogeneousPolynomial& b);
HomogeneousPolynomial operator-(HomogeneousPolynomial a,
                                const HomogeneousPolynomial& b);
HomogeneousPolynomial operator*(HomogeneousPolynomial a, double c);
HomogeneousPolynomial operator*(double c, HomogeneousPolynomial a);
HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                const HomogeneousPolynomial& b);

std::ostream& operator<<(std::ostream& os, const HomogeneousPolynomial& f);

/// All exponent vectors of n variables with total degree `degree`, in
/// lexicographically decreasing order (x1^d first).
std::vector<Exponent> monomial_exponents(int n, int degree);

/// Throws DimensionError if x.size() != f.n().
double evaluate(const HomogeneousPolynomial& f, std::span<const double> x);

/// f(x) evaluated so that its sign is exact: when the rounding error bound
/// of evaluate() does not separate the value from zero, the terms are
/// summed again in 512-bit floating point.
double evaluate_refined(const HomogeneousPolynomial& f,
                        std::span<const double> x);

/// Sum of second derivatives. Forms of degree < 2 map to the zero form of
/// degree max(d - 2, 0).
HomogeneousPolynomial laplacian(const HomogeneousPolynomial& f);

/// d/dx_i (0-based variable index). Degree-0 input maps to the zero form of
/// degree 0.
HomogeneousPolynomial partial_derivative(const HomogeneousPolynomial& f,
                                         int variable);

/// ||x||^{2m} * f.
HomogeneousPolynomial multiply_norm_power(const HomogeneousPolynomial& f,
                                          int m);

/// Exact surface integral of x^a over the unit sphere S^{n-1}, n = a.size().
double sphere_monomial_integral(std::span<const int> exponents);

/// Surface area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

/// L2(S) norm evaluated with a cubature rule whose degree covers f^2.
double l2_norm(const HomogeneousPolynomial& f, const CubatureRule& rule);

}  // namespace harmonia
