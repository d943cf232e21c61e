#include "harmonia/builtins.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {
namespace {

HomogeneousPolynomial linear(std::vector<double> coefficients) {
  return HomogeneousPolynomial::linear_form(coefficients);
}

}  // namespace

HomogeneousPolynomial motzkin() {
  return {3, 6,
          {{{2, 4, 0}, 1.0},
           {{4, 2, 0}, 1.0},
           {{0, 0, 6}, 1.0},
           {{2, 2, 2}, -3.0}}};
}

HomogeneousPolynomial robinson() {
  const auto x1 = linear({1, 0, 0, 0});
  const auto x2 = linear({0, 1, 0, 0});
  const auto x3 = linear({0, 0, 1, 0});
  auto square = [](const HomogeneousPolynomial& p) { return p * p; };

  HomogeneousPolynomial f = square(x1) * square(linear({1, 0, 0, -1}));
  f += square(x2) * square(linear({0, 1, 0, -1}));
  f += square(x3) * square(linear({0, 0, 1, -1}));
  f += 2.0 * (x1 * x2 * x3 * linear({1, 1, 1, -2}));
  return f;
}

HomogeneousPolynomial builtin_polynomial(std::string_view name) {
  if (name == "motzkin") return motzkin();
  if (name == "robinson") return robinson();
  throw std::invalid_argument("unknown builtin polynomial '" + std::string(name) +
                              "' (expected motzkin|robinson)");
}

}  // namespace harmonia
