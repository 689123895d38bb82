#pragma once

#include "dunkl/oracle.hpp"
#include "dunkl/qes.hpp"
#include "dunkl/runconfig.hpp"

#include <string>
#include <vector>

namespace dunkl::cli {

/// Solve the configured family (block route).
std::vector<qes::QESSolution> solve_for(const RunConfig &config);

struct SpectrumResult {
  RunConfig config;
  std::vector<qes::QESSolution> solutions;
  std::vector<qes::QESSolution> closed; // empty when no closed form applies
};
SpectrumResult compute_spectrum(RunConfig config);

std::string spectrum_table(const SpectrumResult &result);
std::string spectrum_csv(const SpectrumResult &result);
std::string spectrum_json(const SpectrumResult &result);

/// One verification check with its measured figure and pinned tolerance.
struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerificationReport {
  RunConfig config;
  std::vector<qes::QESSolution> solutions;
  std::vector<CheckResult> checks;
  oracle::OracleReport oracle_report; // analytic-vs-FD comparison log
  bool pass = false;
};

/// Runs residual, closed-form, operator-identity (line), FD-oracle,
/// orthogonality/node-count and optional expected-energy checks.
VerificationReport run_verification(RunConfig config,
                                    const std::vector<double> &expected_energies = {});
std::string verification_json(const VerificationReport &report);

struct ScanSpec {
  std::string param; // a | b | mu | nu | n
  double from = 0.0;
  double to = 1.0;
  int steps = 10;
};
/// Long-form CSV, one row per (parameter value, level); deterministic row
/// order regardless of the DUNKL_QES_THREADS fan-out.
std::string scan_csv(RunConfig config, const ScanSpec &spec);

struct TabulateSpec {
  double radius = 0.0; // 0: automatic from gauge decay
  int samples = 200;
};
/// CSV of potential and wavefunction samples (line: both parity channels of
/// the potential; Coulomb: one potential column per level).
std::string tabulate_csv(RunConfig config, const TabulateSpec &spec);

} // namespace dunkl::cli
