#pragma once

#include "dunkl/quasipoly.hpp"
#include "dunkl/sectors.hpp"

#include <iosfwd>
#include <string>

namespace dunkl::cli {

/// Flat run description shared by every subcommand; mirrors the key=value
/// config file exactly (flags override file values).
struct RunConfig {
  std::string family = "line"; // line | plane | coulomb
  double mu = 1.0;             // line deformation
  int eps = 0;                 // line parity
  double nu = 0.0;             // plane sector
  double mu1 = 0.0, mu2 = 0.0;
  int eps1 = -1, eps2 = -1;    // -1: infer from nu during validation
  double a = 1.0, b = 1.0;
  int n = 1;
  bool oracle = false;
  double rmax = 0.0; // 0: automatic grid
  int npoints = 0;   // 0: automatic grid
  std::string format = "csv"; // csv | json
  std::string output;         // empty: stdout only

  bool operator==(const RunConfig &) const = default;
};

/// Revalidates every module-level invariant with an actionable message and
/// resolves inferred fields (plane parities).  Throws std::invalid_argument.
void validate(RunConfig &config);

/// Helpers the validated config exposes to the drivers.
DunklParams line_params(const RunConfig &config);
Parity line_parity(const RunConfig &config);
PlaneSector plane_sector(const RunConfig &config);
GaugeParams gauge(const RunConfig &config);

RunConfig parse_config_file(std::istream &in);
RunConfig load_config_file(const std::string &path);
void write_config_file(std::ostream &out, const RunConfig &config);

/// Lossless double formatting used by every text surface (17 significant
/// digits, '.' decimal point).
std::string format_g17(double v);

} // namespace dunkl::cli
