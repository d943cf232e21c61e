#include "harmonia/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "harmonia/builtins.hpp"
#include "harmonia/cubature.hpp"
#include "harmonia/error.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/hierarchy.hpp"
#include "harmonia/io.hpp"

namespace harmonia {
namespace {

bool consumes_polynomial(const std::string& sub) {
  return sub == "decompose" || sub == "bound";
}

std::shared_ptr<const CubatureRule> rule_for(int n, int t) {
  if (const char* dir = std::getenv("HARMONIA_CACHE_DIR"); dir && *dir) {
    return disk_cached_rule(dir, n, t);
  }
  return cached_product_cubature(n, t);
}

// Sends output to config.out when set, otherwise to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void finish(const std::string& path) {
    os_->flush();
    if (!*os_) throw IoError("failed writing " + (path.empty() ? "output" : path));
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int run_cubature(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto rule = rule_for(c.n, c.t);
  Sink sink(c.out, out);
  write_rule_csv(sink.stream(), *rule);
  sink.finish(c.out);
  if (!c.verify) return kExitOk;
  double residual = 0.0;
  for (int d = 0; d <= 2 * c.t; ++d) {
    residual = std::max(residual, verify_exactness(*rule, d));
  }
  // Keep the CSV on stdout clean when no output file was given.
  std::ostream& report = c.out.empty() ? err : out;
  report << "nodes: " << rule->size() << "\nmax residual: "
         << format_real(residual) << '\n';
  return residual < 1e-9 ? kExitOk : kExitNumeric;
}

int run_decompose(const RunConfig& c, std::ostream& out) {
  const HarmonicExpansion e = harmonic_decompose(c.polynomial());
  Sink sink(c.out, out);
  sink.stream() << expansion_to_json(e) << '\n';
  sink.finish(c.out);
  return kExitOk;
}

int run_kernel(const RunConfig& c, std::ostream& out) {
  const GegenbauerKernel kernel = make_kernel(c.kernel, c.n, c.k, c.s);
  Sink sink(c.out, out);
  sink.stream() << kernel_to_json(kernel) << '\n';
  sink.finish(c.out);
  return kExitOk;
}

int run_bound(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const HomogeneousPolynomial f = c.polynomial();
  if (f.degree() % 2 != 0) {
    throw DegreeError("bound needs an even-degree form, got degree " +
                      std::to_string(f.degree()));
  }
  const int k = f.degree() / 2;
  if (c.kernel == KernelKind::kFangFawzi && c.s_min < k) {
    throw std::invalid_argument("fangfawzi kernels need --s-min >= k = " +
                                std::to_string(k));
  }
  SweepOptions options;
  options.measure_time = c.timing;
  options.shared_rule = c.shared_rule;
  options.rule_source = rule_for;
  const SweepReport report = sweep(f, c.kernel, c.s_min, c.s_max, options);

  Sink sink(c.out, out);
  if (c.format == "json") {
    write_bounds_json(sink.stream(), report.levels);
  } else {
    write_bounds_csv(sink.stream(), report.levels);
  }
  sink.finish(c.out);
  for (const LevelError& e : report.errors) err << "error: " << e.message << '\n';
  return report.ok() ? kExitOk : kExitNumeric;
}

}  // namespace

void RunConfig::validate() const {
  if (subcommand != "cubature" && subcommand != "decompose" &&
      subcommand != "kernel" && subcommand != "bound") {
    throw std::invalid_argument("unknown subcommand '" + subcommand + "'");
  }
  if (consumes_polynomial(subcommand) && poly_path.empty() == builtin.empty()) {
    throw std::invalid_argument("give exactly one of --poly and --builtin");
  }
  if (subcommand == "cubature" && (n < 2 || t < 0)) {
    throw std::invalid_argument("cubature needs --n >= 2 and --t >= 0");
  }
  if (subcommand == "kernel") {
    if (n < 3 || s < 0 || k < 0) {
      throw std::invalid_argument("kernel needs --n >= 3, --s >= 0 and --k >= 0");
    }
    if (kernel == KernelKind::kFangFawzi && (k < 1 || s < k)) {
      throw std::invalid_argument("fangfawzi kernels need 1 <= --k <= --s");
    }
  }
  if (subcommand == "bound") {
    if (s_min < 0 || s_min > s_max) {
      throw std::invalid_argument("bound needs 0 <= --s-min <= --s-max");
    }
    if (format != "csv" && format != "json") {
      throw std::invalid_argument("--format must be csv or json");
    }
  }
}

HomogeneousPolynomial RunConfig::polynomial() const {
  if (!builtin.empty()) return builtin_polynomial(builtin);
  return read_polynomial(poly_path);
}

bool parse_command_line(int argc, char** argv, RunConfig& config,
                        int& exit_code) {
  CLI::App app{"Harmonic hierarchy bounds for forms on the unit sphere"};
  app.require_subcommand(1);
  std::string kind = "power";
  auto kinds = CLI::IsMember({"power", "fangfawzi"});

  auto* cub = app.add_subcommand("cubature", "Product cubature rule of degree 2t");
  cub->add_option("--n", config.n, "Ambient dimension")->required();
  cub->add_option("--t", config.t, "Half degree of exactness")->required();
  cub->add_flag("--verify", config.verify, "Report the exactness residual");
  cub->add_option("--out", config.out, "CSV output path");

  auto* dec = app.add_subcommand("decompose", "Harmonic decomposition of a form");
  auto* kern = app.add_subcommand("kernel", "Gegenbauer coefficients of a kernel");
  kern->add_option("--n", config.n, "Ambient dimension")->required();
  kern->add_option("--k", config.k, "Half degree of the forms");
  kern->add_option("--s", config.s, "Half degree of the kernel")->required();
  kern->add_option("--kind", kind, "power|fangfawzi")->check(kinds);
  kern->add_option("--out", config.out, "JSON output path");

  auto* bnd = app.add_subcommand("bound", "Lower and upper bounds over a level range");
  bnd->add_option("--kernel", kind, "power|fangfawzi")->check(kinds);
  bnd->add_option("--s-min", config.s_min, "First level")->required();
  bnd->add_option("--s-max", config.s_max, "Last level")->required();
  bnd->add_option("--format", config.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  bnd->add_flag("--timing", config.timing, "Record elapsed_ms per level");
  bnd->add_flag("--shared-rule", config.shared_rule,
                "Compute all lower bounds on the rule of degree 2(k + s_max)");

  for (auto* sub : {dec, bnd}) {
    auto* poly = sub->add_option("--poly", config.poly_path, "Polynomial JSON file");
    auto* named = sub->add_option("--builtin", config.builtin, "motzkin|robinson")
                      ->check(CLI::IsMember({"motzkin", "robinson"}));
    poly->excludes(named);
    sub->add_option("--out", config.out, "Output path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    exit_code = code == 0 ? kExitOk : kExitIo;
    return false;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.kernel = parse_kernel_kind(kind);
  return true;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    if (config.subcommand == "cubature") return run_cubature(config, out, err);
    if (config.subcommand == "decompose") return run_decompose(config, out);
    if (config.subcommand == "kernel") return run_kernel(config, out);
    return run_bound(config, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DegreeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

int cli_main(int argc, char** argv) {
  RunConfig config;
  int code = kExitOk;
  if (!parse_command_line(argc, argv, config, code)) return code;
  return run(config, std::cout, std::cerr);
}

}  // namespace harmonia
