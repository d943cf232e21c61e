// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. argv[1] is the harmonia executable (criterion 10).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "harmonia/builtins.hpp"
#include "harmonia/cubature.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/hierarchy.hpp"
#include "harmonia/kernel.hpp"
#include "support.hpp"

using namespace harmonia;
using namespace harmonia::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double coefficient_norm(const HomogeneousPolynomial& f) {
  double s = 0.0;
  for (const auto& [e, c] : f.terms()) s += c * c;
  return std::sqrt(s);
}

double l2(const HomogeneousPolynomial& f) {
  return l2_norm(f, *cached_product_cubature(f.n(), f.degree()));
}

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<BoundResult>& levels) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(levels.size());
  for (const auto& r : levels) {
    const double x = std::log(r.s);
    const double y = std::log(std::abs(r.lower));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

Outcome cubature_exactness() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  double worst = 0.0;
  for (int n : {3, 4, 5}) {
    for (int t = 1; t <= 6; ++t) {
      const auto rule = product_cubature(n, t);
      if (rule.size() != 2 * static_cast<std::size_t>(std::pow(t + 1, n - 1) + 0.5)) {
        o.pass = false;
      }
      for (int d = 0; d <= 2 * t; ++d) worst = std::max(worst, verify_exactness(rule, d));
    }
  }
  const double secs = seconds_since(start);
  o.pass = o.pass && worst < 1e-9 && secs < 30.0;
  o.detail = "node counts 2(t+1)^(n-1), max residual " + fmt("%.2e", worst) +
             " (< 1e-9), " + fmt("%.2f", secs) + " s (< 30 s)";
  return o;
}

Outcome harmonic_decomposition() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  double worst_lap = 0.0;
  double worst_rec = 0.0;
  for (auto [n, degree] : {std::pair{3, 6}, std::pair{4, 4}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_form(n, degree, rng);
      const auto e = harmonic_decompose(f);
      for (const auto& c : e.components) {
        const double norm = coefficient_norm(c);
        if (norm > 0) worst_lap = std::max(worst_lap, coefficient_norm(laplacian(c)) / norm);
      }
      worst_rec = std::max(worst_rec, (reconstruct(e) - f).max_abs_coefficient());
    }
  }
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = worst_lap <= 1e-10 && worst_rec <= 1e-12 && secs < 10.0;
  o.detail = "max |Lap f_2j|/|f_2j| " + fmt("%.2e", worst_lap) + " (<= 1e-10), reconstruction " +
             fmt("%.2e", worst_rec) + " (<= 1e-12), " + fmt("%.2f", secs) + " s (< 10 s)";
  return o;
}

Outcome diagonalization() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick_k(1, 3);
  std::uniform_int_distribution<int> pick_s(0, 6);
  std::uniform_real_distribution<double> lam(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int k = pick_k(rng);
    const int s = pick_s(rng);
    const auto f = random_form(3, 2 * k, rng);
    std::vector<double> lambdas(s + 1, 1.0);
    for (int j = 1; j <= s; ++j) lambdas[j] = lam(rng);
    GegenbauerKernel h(3, lambdas);
    if (trial % 3 == 1) h = power_kernel(3, s);
    if (trial % 3 == 2 && s >= k) h = fang_fawzi_kernel(3, k, s).kernel;
    const auto rule = product_cubature(3, k + s);
    const auto x = random_unit_vector(3, rng);
    const double gap = std::abs(convolve_on_nodes(f, h, rule, x) - apply_gamma(f, h)(x));
    worst = std::max(worst, gap / (1 + l2(f)));
  }
  return {worst <= 1e-8, "max |conv - Gamma f| / (1 + |f|_2) over 20 triples " +
                             fmt("%.2e", worst) + " (<= 1e-8)"};
}

Outcome power_kernel_closed_form() {
  const double l2v = power_kernel(3, 1).lambda(1);
  bool lambda0 = true;
  for (int n = 3; n <= 6; ++n) {
    for (int s = 0; s <= 40; ++s) lambda0 = lambda0 && std::abs(power_kernel(n, s).lambda(0) - 1.0) == 0.0;
  }
  double worst = 0.0;
  for (int n : {3, 4, 5}) {
    for (int s = 0; s <= 6; ++s) {
      const auto expanded = gegenbauer_expand(power_kernel_polynomial(n, s), n);
      const auto closed = power_kernel(n, s);
      for (int j = 0; j <= s; ++j) worst = std::max(worst, std::abs(expanded.lambda(j) - closed.lambda(j)));
    }
  }
  Outcome o;
  o.pass = std::abs(l2v - 0.4) <= 1e-12 && lambda0 && worst <= 1e-8;
  o.detail = "lambda_2(n=3,s=1) = " + fmt("%.17g", l2v) + ", lambda_0 = 1 for n=3..6 s=0..40: " +
             (lambda0 ? "yes" : "no") + ", expansion vs closed form " + fmt("%.2e", worst) + " (<= 1e-8)";
  return o;
}

Outcome motzkin_rates() {
  const auto start = std::chrono::steady_clock::now();
  const auto m = motzkin();
  // Lower bounds on one shared node set; see SweepOptions::shared_rule.
  SweepOptions options;
  options.shared_rule = true;
  const auto power = sweep(m, KernelKind::kPower, 8, 32, options);
  const auto ff = sweep(m, KernelKind::kFangFawzi, 6, 20, options);
  bool ok = power.ok() && ff.ok();
  bool signs = true;
  bool lower_monotone = true;
  bool upper_monotone = true;
  for (const auto* report : {&power, &ff}) {
    for (std::size_t i = 0; i < report->levels.size(); ++i) {
      const auto& r = report->levels[i];
      signs = signs && r.lower <= 0.0 && r.upper >= 0.0;
      if (i > 0) {
        const auto& p = report->levels[i - 1];
        upper_monotone = upper_monotone && r.upper <= p.upper + 1e-12;
        if (report == &power) lower_monotone = lower_monotone && r.lower >= p.lower - 1e-9;
      }
    }
  }
  const double sp = loglog_slope(power.levels);
  const double sf = loglog_slope(ff.levels);
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = ok && signs && lower_monotone && upper_monotone && sp >= -1.4 && sp <= -0.7 &&
           sf >= -2.6 && sf <= -1.5 && secs < 300.0;
  o.detail = std::string("shared rule, lower <= 0 <= upper: ") + (signs ? "yes" : "no") +
             ", power lower nondecreasing: " + (lower_monotone ? "yes" : "no") +
             ", upper nonincreasing: " + (upper_monotone ? "yes" : "no") + ", slope power(8..32) " +
             fmt("%.3f", sp) + " in [-1.4,-0.7], slope fangfawzi(6..20) " + fmt("%.3f", sf) +
             " in [-2.6,-1.5], " + fmt("%.2f", secs) + " s (< 300 s)";
  return o;
}

Outcome robinson_bounds() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = robinson();
  bool signs = true;
  std::string detail;
  bool shrink = true;
  for (auto kind : {KernelKind::kPower, KernelKind::kFangFawzi}) {
    const auto report = sweep(r, kind, 4, 12);
    signs = signs && report.ok();
    for (const auto& level : report.levels) signs = signs && level.lower <= 0.0 && 0.0 <= level.upper;
    const double first = std::abs(report.levels.front().lower);
    const double last = std::abs(report.levels.back().lower);
    shrink = shrink && last < first;
    detail += std::string(to_string(kind)) + " |beta*| " + fmt("%.4g", first) + " -> " + fmt("%.4g", last) + ", ";
  }
  const double secs = seconds_since(start);
  return {signs && shrink && secs < 600.0,
          std::string("lower <= 0 <= upper for s=4..12: ") + (signs ? "yes" : "no") + ", " + detail +
              fmt("%.2f", secs) + " s (< 600 s)"};
}

Outcome frobenius_inequality() {
  std::mt19937_64 rng(99);
  const auto samples = halton_sphere(3, 100000);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 3;
    const auto f = random_form(3, 2 * k, rng);
    for (const auto& h : {power_kernel(3, 8), fang_fawzi_kernel(3, k, 8).kernel}) {
      const double sup = sampled_sup_norm(apply_gamma_inverse(f, h) - f, samples);
      const double bound = frobenius_threshold(h, k) / std::sqrt(sphere_area(3)) * l2(f);
      worst_ratio = std::max(worst_ratio, sup / bound);
    }
  }
  return {worst_ratio <= 1 + 1e-6,
          "max sup|Gamma^-1 f - f| / (tau |f|_2 / sqrt(mu)) " + fmt("%.4f", worst_ratio) +
              " (<= 1 + 1e-6), 20 forms x 2 kernels, 1e5 sample points"};
}

Outcome fang_fawzi_identity() {
  double worst_rho = 0.0;
  double worst_l0 = 0.0;
  for (int n : {3, 4}) {
    for (int k : {2, 3}) {
      for (int s = k; s <= 16; ++s) {
        const auto sol = fang_fawzi_kernel(n, k, s);
        double rho = 0.0;
        for (int j = 0; j <= k; ++j) rho += 1.0 - sol.kernel.lambda(j);
        worst_rho = std::max(worst_rho, std::abs(rho - (k - k * sol.eigenvalue)));
        worst_l0 = std::max(worst_l0, std::abs(sol.kernel.lambda(0) - 1.0));
      }
    }
  }
  return {worst_rho <= 1e-9 && worst_l0 <= 1e-10,
          "max |rho - (k - k lambda_max)| " + fmt("%.2e", worst_rho) + " (<= 1e-9), max |lambda_0 - 1| " +
              fmt("%.2e", worst_l0) + " (<= 1e-10)"};
}

Outcome dual_generators() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 1 + trial % 3;
    const int s = k + trial % 4;
    const auto f = random_form(3, 2 * k, rng);
    const auto h = trial % 2 ? power_kernel(3, s) : fang_fawzi_kernel(3, k, s).kernel;
    const auto rule = product_cubature(3, k + s);
    const auto avg = apply_gamma(f, h);
    const auto pairing_rule = product_cubature(3, 2 * k + s);
    std::uniform_int_distribution<std::size_t> pick(0, rule.size() - 1);
    for (int g = 0; g < 10; ++g) {
      const auto gen = moment_generator(k, h, rule.node(pick(rng)));
      const double pairing = integrate(pairing_rule, gen.representer * f);
      worst = std::max(worst, std::abs(pairing - avg(gen.node)) / (1 + l2(f)));
    }
  }
  return {worst <= 1e-7, "max |<L_y, f> - Gamma f(y)| / (1 + |f|_2) over 10 forms x 10 generators " +
                             fmt("%.2e", worst) + " (<= 1e-7)"};
}

Outcome determinism(const std::string& exe) {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "harmonia_acceptance";
  fs::create_directories(dir);
  std::string files[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("run" + std::to_string(i) + ".csv");
    const std::string cmd = "\"" + exe +
                            "\" bound --builtin motzkin --kernel fangfawzi --s-min 6 --s-max 12 > \"" +
                            path.string() + "\"";
    codes[i] = std::system(cmd.c_str());
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    files[i] = ss.str();
  }
  const bool same = codes[0] == 0 && codes[1] == 0 && !files[0].empty() && files[0] == files[1];
  return {same, std::string("two CLI runs, ") + std::to_string(files[0].size()) + " bytes, " +
                    (same ? "byte-identical" : "different or failed")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-harmonia-executable>\n";
    return 2;
  }
  const std::string exe = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"cubature exactness", cubature_exactness},
      {"harmonic decomposition", harmonic_decomposition},
      {"diagonalization", diagonalization},
      {"pure-power kernel closed form", power_kernel_closed_form},
      {"Motzkin convergence rates", motzkin_rates},
      {"Robinson bounds", robinson_bounds},
      {"Frobenius threshold inequality", frobenius_inequality},
      {"Fang-Fawzi identity", fang_fawzi_identity},
      {"dual generators", dual_generators},
      {"determinism", [&] { return determinism(exe); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
