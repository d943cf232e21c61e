#include "harmonia/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "harmonia/cubature.hpp"
#include "harmonia/detail/summation.hpp"
#include "harmonia/error.hpp"

namespace harmonia {
namespace {

// Coefficients below this magnitude are exact-zero artifacts (e.g. a - a).
constexpr double kZeroCoefficient = 1e-300;

void check_variable_count(int n) {
  if (n < 2) {
    throw std::invalid_argument("polynomial needs at least 2 variables, got " +
                                std::to_string(n));
  }
}

void insert_term(HomogeneousPolynomial::TermMap& terms, const Exponent& e,
                 double c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kZeroCoefficient) terms.erase(it);
}

void enumerate(int n, int remaining, int var, Exponent& cur,
               std::vector<Exponent>& out) {
  if (var == n - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[var] = a;
    enumerate(n, remaining - a, var + 1, cur, out);
  }
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int n, int degree)
    : n_(n), degree_(degree) {
  check_variable_count(n);
  if (degree < 0) throw std::invalid_argument("negative degree");
}

HomogeneousPolynomial::HomogeneousPolynomial(int n, int degree, TermMap terms)
    : HomogeneousPolynomial(n, degree) {
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != n) {
      throw DimensionError("exponent of length " + std::to_string(e.size()) +
                           " in a polynomial of " + std::to_string(n) +
                           " variables");
    }
    if (std::any_of(e.begin(), e.end(), [](int a) { return a < 0; })) {
      throw std::invalid_argument("negative exponent");
    }
    if (std::accumulate(e.begin(), e.end(), 0) != degree) {
      throw DegreeError("term of degree " +
                        std::to_string(std::accumulate(e.begin(), e.end(), 0)) +
                        " in a form of degree " + std::to_string(degree));
    }
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coefficient");
    if (std::abs(c) >= kZeroCoefficient) terms_.emplace(e, c);
  }
}

HomogeneousPolynomial HomogeneousPolynomial::constant(int n, double value) {
  TermMap t;
  t.emplace(Exponent(n, 0), value);
  return {n, 0, std::move(t)};
}

HomogeneousPolynomial HomogeneousPolynomial::norm_power(int n, int m) {
  return multiply_norm_power(constant(n, 1.0), m);
}

HomogeneousPolynomial HomogeneousPolynomial::linear_form(
    std::span<const double> y) {
  const int n = static_cast<int>(y.size());
  TermMap t;
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    t.emplace(std::move(e), y[i]);
  }
  return {n, 1, std::move(t)};
}

double HomogeneousPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double HomogeneousPolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double HomogeneousPolynomial::operator()(std::span<const double> x) const {
  return evaluate(*this, x);
}

void HomogeneousPolynomial::add_scaled(const HomogeneousPolynomial& other,
                                       double c) {
  if (other.n_ != n_ || other.degree_ != degree_) {
    throw DegreeError("cannot add forms of shape (n=" + std::to_string(n_) +
                      ", d=" + std::to_string(degree_) + ") and (n=" +
                      std::to_string(other.n_) +
                      ", d=" + std::to_string(other.degree_) + ")");
  }
  for (const auto& [e, v] : other.terms_) insert_term(terms_, e, c * v);
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(
    const HomogeneousPolynomial& other) {
  add_scaled(other, 1.0);
  return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator-=(
    const HomogeneousPolynomial& other) {
  add_scaled(other, -1.0);
  return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(double c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (std::abs(it->second) < kZeroCoefficient) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

HomogeneousPolynomial operator+(HomogeneousPolynomial a,
                                const HomogeneousPolynomial& b) {
  a += b;
  return a;
}

HomogeneousPolynomial operator-(HomogeneousPolynomial a,
                                const HomogeneousPolynomial& b) {
  a -= b;
  return a;
}

HomogeneousPolynomial operator*(HomogeneousPolynomial a, double c) {
  a *= c;
  return a;
}

HomogeneousPolynomial operator*(double c, HomogeneousPolynomial a) {
  a *= c;
  return a;
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                const HomogeneousPolynomial& b) {
  if (a.n() != b.n()) {
    throw DimensionError("cannot multiply forms in different variable counts");
  }
  HomogeneousPolynomial::TermMap out;
  Exponent e(a.n());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < a.n(); ++i) e[i] = ea[i] + eb[i];
      insert_term(out, e, ca * cb);
    }
  }
  return {a.n(), a.degree() + b.degree(), std::move(out)};
}

std::ostream& operator<<(std::ostream& os, const HomogeneousPolynomial& f) {
  os << "Form(n=" << f.n() << ", d=" << f.degree() << ":";
  if (f.is_zero()) os << " 0";
  for (const auto& [e, c] : f.terms()) {
    os << ' ' << (c < 0 ? '-' : '+') << ' ' << std::abs(c);
    for (int i = 0; i < f.n(); ++i) {
      if (e[i] == 1) os << "*x" << i + 1;
      if (e[i] > 1) os << "*x" << i + 1 << '^' << e[i];
    }
  }
  return os << ')';
}

std::vector<Exponent> monomial_exponents(int n, int degree) {
  check_variable_count(n);
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent cur(n, 0);
  enumerate(n, degree, 0, cur, out);
  return out;
}

double evaluate(const HomogeneousPolynomial& f, std::span<const double> x) {
  const int n = f.n();
  if (static_cast<int>(x.size()) != n) {
    throw DimensionError("point of dimension " + std::to_string(x.size()) +
                         " for a polynomial in " + std::to_string(n) +
                         " variables");
  }
  const int d = f.degree();
  // powers[i * (d + 1) + a] = x_i^a
  std::vector<double> powers(static_cast<std::size_t>(n) * (d + 1));
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int a = 0; a <= d; ++a) {
      powers[i * (d + 1) + a] = p;
      p *= x[i];
    }
  }
  double sum = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double term = c;
    for (int i = 0; i < n; ++i) term *= powers[i * (d + 1) + e[i]];
    sum += term;
  }
  return sum;
}

double evaluate_refined(const HomogeneousPolynomial& f,
                        std::span<const double> x) {
  const double fast = evaluate(f, x);
  const int n = f.n();
  double magnitude = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double term = std::abs(c);
    for (int i = 0; i < n; ++i) term *= std::pow(std::abs(x[i]), e[i]);
    magnitude += term;
  }
  // Each term takes at most degree + n roundings and the sum one per term.
  const double steps = f.degree() + n + static_cast<double>(f.size());
  const double bound = 2.0 * steps * std::numeric_limits<double>::epsilon() * magnitude;
  if (std::abs(fast) > bound) return fast;

  // Wide enough that every term is an exact product of doubles.
  using Wide = boost::multiprecision::number<
      boost::multiprecision::cpp_bin_float<512, boost::multiprecision::digit_base_2>,
      boost::multiprecision::et_off>;
  Wide sum = 0;
  for (const auto& [e, c] : f.terms()) {
    Wide term = c;
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < e[i]; ++a) term *= x[i];
    }
    sum += term;
  }
  return static_cast<double>(sum);
}

HomogeneousPolynomial laplacian(const HomogeneousPolynomial& f) {
  const int n = f.n();
  HomogeneousPolynomial::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      if (e[i] < 2) continue;
      Exponent de = e;
      de[i] -= 2;
      insert_term(out, de, c * e[i] * (e[i] - 1));
    }
  }
  return {n, std::max(f.degree() - 2, 0), std::move(out)};
}

HomogeneousPolynomial partial_derivative(const HomogeneousPolynomial& f,
                                         int variable) {
  const int n = f.n();
  if (variable < 0 || variable >= n) {
    throw DimensionError("variable index " + std::to_string(variable) +
                         " out of range");
  }
  HomogeneousPolynomial::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    if (e[variable] == 0) continue;
    Exponent de = e;
    de[variable] -= 1;
    insert_term(out, de, c * e[variable]);
  }
  return {n, std::max(f.degree() - 1, 0), std::move(out)};
}

HomogeneousPolynomial multiply_norm_power(const HomogeneousPolynomial& f,
                                          int m) {
  if (m < 0) throw std::invalid_argument("negative norm power");
  const int n = f.n();
  HomogeneousPolynomial result = f;
  for (int step = 0; step < m; ++step) {
    HomogeneousPolynomial::TermMap out;
    for (const auto& [e, c] : result.terms()) {
      for (int i = 0; i < n; ++i) {
        Exponent se = e;
        se[i] += 2;
        insert_term(out, se, c);
      }
    }
    result = HomogeneousPolynomial(n, result.degree() + 2, std::move(out));
  }
  return result;
}

double sphere_monomial_integral(std::span<const int> exponents) {
  const int n = static_cast<int>(exponents.size());
  check_variable_count(n);
  double log_num = 0.0;
  int total = 0;
  for (int a : exponents) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    if (a % 2 != 0) return 0.0;
    log_num += std::lgamma((a + 1) / 2.0);
    total += a;
  }
  return 2.0 * std::exp(log_num - std::lgamma((total + n) / 2.0));
}

double sphere_area(int n) {
  check_variable_count(n);
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

double l2_norm(const HomogeneousPolynomial& f, const CubatureRule& rule) {
  if (rule.algebraic_degree() < 2 * f.degree()) {
    throw DegreeError("L2 norm of a degree-" + std::to_string(f.degree()) +
                      " form needs a rule of degree >= " +
                      std::to_string(2 * f.degree()) + ", got " +
                      std::to_string(rule.algebraic_degree()));
  }
  const std::vector<double> values = evaluate_on_nodes(f, rule);
  const auto w = rule.weights();
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum.add(w[i] * values[i] * values[i]);
  }
  return std::sqrt(sum.value());
}

}  // namespace harmonia
