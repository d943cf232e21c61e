#pragma once

#include <iosfwd>
#include <string>

#include "harmonia/kernel.hpp"
#include "harmonia/polynomial.hpp"

namespace harmonia {

enum ExitCode : int { kExitOk = 0, kExitNumeric = 2, kExitIo = 3 };

struct RunConfig {
  std::string subcommand;  // cubature | decompose | kernel | bound
  std::string poly_path;
  std::string builtin;
  int n = 0;
  int k = 0;
  int t = 0;
  int s = 0;
  int s_min = 0;
  int s_max = 0;
  KernelKind kernel = KernelKind::kPower;
  std::string out;  // empty: standard output
  std::string format = "csv";
  bool verify = false;
  bool timing = false;
  bool shared_rule = false;

  /// Throws std::invalid_argument when the configuration is inconsistent.
  void validate() const;
  /// The polynomial named by poly_path or builtin.
  HomogeneousPolynomial polynomial() const;
};

/// Parses argv into a config. Returns false (and sets `exit_code`) when the
/// program should stop, e.g. after --help or a usage error.
bool parse_command_line(int argc, char** argv, RunConfig& config,
                        int& exit_code);

/// Executes a validated config. Results go to config.out or `out`;
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line followed by run on std::cout / std::cerr.
int cli_main(int argc, char** argv);

}  // namespace harmonia
