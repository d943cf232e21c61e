#include "harmonia/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "harmonia/error.hpp"

namespace harmonia {
namespace {

using nlohmann::json;

json polynomial_json(const HomogeneousPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", c}});
  return {{"n", f.n()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

HomogeneousPolynomial polynomial_from(const json& j) {
  if (!j.is_object()) throw IoError("polynomial JSON must be an object");
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  if (n < 1 || degree < 0) throw IoError("polynomial JSON: bad n or degree");
  HomogeneousPolynomial::TermMap terms;
  for (const json& t : j.at("terms")) {
    Exponent e = t.at("exp").get<Exponent>();
    if (static_cast<int>(e.size()) != n) {
      throw DimensionError("polynomial JSON: exponent of length " +
                           std::to_string(e.size()) + " with n = " +
                           std::to_string(n));
    }
    const double c = t.at("coef").get<double>();
    if (!std::isfinite(c)) throw IoError("polynomial JSON: non-finite coefficient");
    terms[std::move(e)] += c;
  }
  return {n, degree, std::move(terms)};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string polynomial_to_json(const HomogeneousPolynomial& f) {
  return polynomial_json(f).dump();
}

HomogeneousPolynomial polynomial_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    return polynomial_from(j);
  } catch (const json::exception& e) {
    throw IoError(std::string("polynomial JSON: ") + e.what());
  }
}

HomogeneousPolynomial read_polynomial(const std::filesystem::path& path) {
  return polynomial_from_json(slurp(path));
}

std::string expansion_to_json(const HarmonicExpansion& e) {
  // One component per line keeps the file diffable.
  std::string out = "[";
  for (std::size_t j = 0; j < e.components.size(); ++j) {
    out += j == 0 ? "\n  " : ",\n  ";
    out += polynomial_json(e.components[j]).dump();
  }
  return out + "\n]";
}

HarmonicExpansion expansion_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_array() || j.empty()) {
    throw IoError("expansion JSON must be a non-empty array");
  }
  HarmonicExpansion e{0, static_cast<int>(j.size()) - 1, {}};
  try {
    for (const json& c : j) e.components.push_back(polynomial_from(c));
  } catch (const json::exception& ex) {
    throw IoError(std::string("expansion JSON: ") + ex.what());
  }
  e.n = e.components.front().n();
  return e;
}

std::string kernel_to_json(const GegenbauerKernel& kernel) {
  json lambdas = json::array();
  for (double v : kernel.lambdas()) lambdas.push_back(v);
  return json{{"n", kernel.n()}, {"s", kernel.s()}, {"lambdas", lambdas}}.dump();
}

void write_rule_csv(std::ostream& os, const CubatureRule& rule) {
  for (int i = 1; i <= rule.n(); ++i) os << 'x' << i << ',';
  os << "weight\n";
  const auto w = rule.weights();
  for (std::size_t p = 0; p < rule.size(); ++p) {
    for (double v : rule.node(p)) os << format_real(v) << ',';
    os << format_real(w[p]) << '\n';
  }
}

CubatureRule read_rule_csv(std::istream& is, int algebraic_degree) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("rule CSV: missing header");
  int n = 0;
  {
    std::istringstream header(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(header, cell, ',')) cells.push_back(cell);
    if (cells.size() < 2 || cells.back() != "weight") {
      throw IoError("rule CSV: header must end with 'weight'");
    }
    n = static_cast<int>(cells.size()) - 1;
    for (int i = 0; i < n; ++i) {
      if (cells[i] != "x" + std::to_string(i + 1)) {
        throw IoError("rule CSV: unexpected column '" + cells[i] + "'");
      }
    }
  }
  std::vector<double> nodes;
  std::vector<double> weights;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size()) {
        throw IoError("rule CSV: bad number '" + cell + "'");
      }
      values.push_back(v);
    }
    if (static_cast<int>(values.size()) != n + 1) {
      throw IoError("rule CSV: row with " + std::to_string(values.size()) +
                    " columns, expected " + std::to_string(n + 1));
    }
    nodes.insert(nodes.end(), values.begin(), values.end() - 1);
    weights.push_back(values.back());
  }
  return {n, algebraic_degree, std::move(nodes), std::move(weights)};
}

std::shared_ptr<const CubatureRule> disk_cached_rule(
    const std::filesystem::path& dir, int n, int t) {
  const auto path = dir / ("rule_n" + std::to_string(n) + "_t" +
                           std::to_string(t) + ".csv");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    auto rule = std::make_shared<const CubatureRule>(read_rule_csv(in, 2 * t));
    const std::size_t expected =
        2 * static_cast<std::size_t>(std::pow(t + 1, n - 1) + 0.5);
    if (rule->n() != n || rule->size() != expected) {
      throw IoError(path.string() + " does not hold the degree-" +
                    std::to_string(2 * t) + " rule for n = " + std::to_string(n));
    }
    return rule;
  }
  auto rule = cached_product_cubature(n, t);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  // Write to a temporary name first so a concurrent reader never sees a
  // truncated file.
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write " + tmp);
    write_rule_csv(out, *rule);
    if (!out) throw IoError("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp + " to " + path.string());
  return rule;
}

void write_bounds_csv(std::ostream& os, std::span<const BoundResult> levels) {
  os << "s,kernel,tau,lower,upper,cubature_size,elapsed_ms\n";
  for (const BoundResult& r : levels) {
    os << r.s << ',' << to_string(r.kernel_kind) << ',' << format_real(r.tau)
       << ',' << format_real(r.lower) << ',' << format_real(r.upper) << ','
       << r.cubature_size << ',' << format_real(r.elapsed_ms) << '\n';
  }
}

void write_bounds_json(std::ostream& os, std::span<const BoundResult> levels) {
  json out = json::array();
  for (const BoundResult& r : levels) {
    out.push_back({{"s", r.s},
                   {"kernel", std::string(to_string(r.kernel_kind))},
                   {"tau", finite_or_null(r.tau)},
                   {"lower", finite_or_null(r.lower)},
                   {"upper", finite_or_null(r.upper)},
                   {"cubature_size", r.cubature_size},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  os << out.dump(2) << '\n';
}

}  // namespace harmonia
