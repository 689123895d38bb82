// Command-line surface for the quasi-exactly solvable Dunkl oscillator and
// Coulomb families: spectra, brute-force verification, parameter scans and
// plot-ready tables.

#include "dunkl/report.hpp"
#include "dunkl/runconfig.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using dunkl::cli::RunConfig;

void add_common_options(CLI::App *cmd, RunConfig &config, std::string &config_path) {
  cmd->add_option("--config", config_path, "key=value config file (flags override it)");
  cmd->add_option("--family", config.family, "line | plane | coulomb");
  cmd->add_option("--mu", config.mu, "line deformation parameter (mu > -1/2)");
  cmd->add_option("--eps", config.eps, "line parity (0 or 1)");
  cmd->add_option("--nu", config.nu, "plane sector quantum number");
  cmd->add_option("--mu1", config.mu1, "plane deformation parameter 1");
  cmd->add_option("--mu2", config.mu2, "plane deformation parameter 2");
  cmd->add_option("--eps1", config.eps1, "plane parity 1 (inferred from nu when omitted)");
  cmd->add_option("--eps2", config.eps2, "plane parity 2 (inferred from nu when omitted)");
  cmd->add_option("--a", config.a, "quartic gauge strength (a > 0; a = 0 needs b > 0)");
  cmd->add_option("--b", config.b, "quadratic gauge strength");
  cmd->add_option("--n", config.n, "representation index: n+1 known levels");
  cmd->add_flag("--oracle,!--no-oracle", config.oracle, "run the finite-difference oracle");
  cmd->add_option("--rmax", config.rmax, "oracle grid extent (0 = automatic)");
  cmd->add_option("--npoints", config.npoints, "oracle grid points (0 = automatic, else >= 200)");
  cmd->add_option("--format", config.format, "csv | json");
  cmd->add_option("--output", config.output, "write results to this path as well");
}

void deliver(const RunConfig &config, const std::string &file_payload,
             const std::string &stdout_payload) {
  std::cout << stdout_payload;
  if (!config.output.empty()) {
    std::ofstream out(config.output);
    if (!out) throw std::invalid_argument("cannot open output file: " + config.output);
    out << file_payload;
  }
}

// The config file provides defaults; explicit flags then overwrite them, so
// the file has to be loaded before CLI11 parses the command line.
std::string find_config_path(int argc, char **argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quasi-exactly solvable Dunkl oscillator / Coulomb spectra"};
  app.require_subcommand(1);

  RunConfig config;
  std::string config_path = find_config_path(argc, argv);
  try {
    if (!config_path.empty()) config = dunkl::cli::load_config_file(config_path);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string config_opt;
  dunkl::cli::ScanSpec scan;
  dunkl::cli::TabulateSpec tab;
  std::vector<double> expected;

  CLI::App *spectrum = app.add_subcommand("spectrum", "print the n+1 known levels");
  add_common_options(spectrum, config, config_opt);

  CLI::App *verify = app.add_subcommand("verify", "verify spectra against the oracles");
  add_common_options(verify, config, config_opt);
  verify->add_option("--expect", expected,
                     "energies the spectrum is expected to contain (verification fails otherwise)");

  CLI::App *scan_cmd = app.add_subcommand("scan", "sweep one parameter, emit long-form CSV");
  add_common_options(scan_cmd, config, config_opt);
  scan_cmd->add_option("--scan-param", scan.param, "a | b | mu | nu | n")->required();
  scan_cmd->add_option("--from", scan.from, "sweep start")->required();
  scan_cmd->add_option("--to", scan.to, "sweep end")->required();
  scan_cmd->add_option("--steps", scan.steps, "number of intervals (ignored for n)");

  CLI::App *tabulate = app.add_subcommand("tabulate", "sample potentials and wavefunctions");
  add_common_options(tabulate, config, config_opt);
  tabulate->add_option("--radius", tab.radius, "sampling extent (0 = automatic)");
  tabulate->add_option("--samples", tab.samples, "samples per half axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) {
      auto result = dunkl::cli::compute_spectrum(config);
      std::string payload = result.config.format == "json" ? dunkl::cli::spectrum_json(result)
                                                           : dunkl::cli::spectrum_csv(result);
      deliver(result.config, payload, dunkl::cli::spectrum_table(result));
      if (config.oracle) {
        auto report = dunkl::cli::run_verification(config);
        for (const auto &c : report.checks)
          if (c.name == "oracle-energies")
            std::cout << "oracle max |analytic - fd| = " << dunkl::cli::format_g17(c.value)
                      << (c.pass ? " (ok)" : " (FAILED)") << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      auto report = dunkl::cli::run_verification(config, expected);
      std::string payload = dunkl::cli::verification_json(report);
      deliver(report.config, payload, payload);
      return report.pass ? 0 : 1;
    }
    if (scan_cmd->parsed()) {
      std::string payload = dunkl::cli::scan_csv(config, scan);
      deliver(config, payload, payload);
      return 0;
    }
    std::string payload = dunkl::cli::tabulate_csv(config, tab);
    deliver(config, payload, payload);
    return 0;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
