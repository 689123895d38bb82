#pragma once

#include "dunkl/qes.hpp"
#include "dunkl/quasipoly.hpp"
#include "dunkl/sectors.hpp"

#include <functional>
#include <string>

namespace dunkl::oracle {

/// Uniform half-line grid with Dirichlet ends: interior nodes (i+1)h,
/// i = 0..npoints-1, h = rmax/(npoints+1); rmin coincides with h.
struct RadialGrid {
  double rmax = 0.0;
  int npoints = 0;

  RadialGrid() = default;
  RadialGrid(double rmax_, int npoints_);
  double h() const { return rmax / (npoints + 1); }
  double rmin() const { return h(); }
  double node(int i) const { return (i + 1) * h(); }
  /// Same interval with halved spacing (nodes nest).
  RadialGrid refined() const { return RadialGrid(rmax, 2 * npoints + 1); }
};

/// m lowest eigenvalues of -d^2/dr^2 + veff(r) discretized by second-order
/// central differences, by bisection on Sturm counts.
std::vector<double> fd_eigen_radial(const std::function<double(double)> &veff,
                                    const RadialGrid &grid, int m);

/// Eigenvector samples for one FD eigenvalue (inverse iteration).
std::vector<double> fd_eigenvector(const std::function<double(double)> &veff,
                                   const RadialGrid &grid, double eigenvalue);

/// Sign changes of a sampled eigenvector above noise level = node count.
int count_nodes(const std::vector<double> &samples);

/// h^2 -> 0 Richardson extrapolation over the grid and its refinement.
struct RichardsonEigen {
  std::vector<double> coarse, fine, extrapolated, error_estimate;
};
RichardsonEigen fd_eigen_richardson(const std::function<double(double)> &veff,
                                    const RadialGrid &grid, int m);

/// Measured convergence order of eigenvalue `index` over three nested grids;
/// second-order differences should give a rate near 2.
double fd_convergence_order(const std::function<double(double)> &veff, const RadialGrid &grid,
                            int index);

/// Gauged half-line potentials of the families (the operator the FD oracle
/// discretizes is -u'' + veff u = E u with E = 2 * physical energy for the
/// line/plane families).
std::function<double(double)> line_gauged_potential(const DunklParams &p, const Parity &eps,
                                                    const GaugeParams &g, int n);
std::function<double(double)> plane_oscillator_gauged_potential(const PlaneSector &sector,
                                                                const GaugeParams &g, int n);
std::function<double(double)> plane_coulomb_gauged_potential(const PlaneSector &sector,
                                                             const GaugeParams &g, int n,
                                                             double alpha_k);
std::function<double(double)> es_oscillator_gauged_potential(double l);
std::function<double(double)> es_coulomb_gauged_potential(const PlaneSector &sector,
                                                          double alpha_coupling);

/// Default grids sized so the gauge factor is below 1e-14 at rmax.
RadialGrid default_oscillator_grid(const GaugeParams &g);
RadialGrid default_coulomb_grid(const GaugeParams &g);
RadialGrid default_es_coulomb_grid(double beta);

/// Weighted inner products: |x|^exponent over the whole line (folded onto the
/// half line by parity) or rho^exponent over the half line.  Adaptive
/// Gauss-Legendre panels; relative accuracy target 1e-10 or better.
struct Weight {
  enum class Kind { line, radial } kind = Kind::radial;
  double exponent = 0.0;
};
double weighted_inner_product(const QuasiPolynomial &f, const QuasiPolynomial &g, const Weight &w);
double weighted_norm(const QuasiPolynomial &f, const Weight &w);

/// Coefficient-space relative residual ||H psi - E psi|| / (||psi|| max(|E|,1)).
double residual_meter(const std::function<LaurentCoeffs(const QuasiPolynomial &)> &apply_h,
                      const QuasiPolynomial &psi, double energy);

/// Where the analytic QES energies sit inside the FD spectrum (1-based; 0
/// marks a level the oracle could not match).  For the Coulomb family each
/// k indexes its own potential and positions[k] is the position of the shared
/// energy in that potential's spectrum.
struct PositionAudit {
  std::vector<double> analytic; // gauged convention (FD eigenvalue scale)
  std::vector<double> fd;       // extrapolated lowest eigenvalues (oscillators)
  std::vector<int> positions;
  bool all_among_lowest = false;
};
PositionAudit audit_line(const DunklParams &p, const Parity &eps, const GaugeParams &g, int n);
PositionAudit audit_plane_oscillator(const PlaneSector &sector, const GaugeParams &g, int n);
PositionAudit audit_plane_coulomb(const PlaneSector &sector, const GaugeParams &g, int n);

/// Append-only comparison log consumed by the CLI report writer.
struct OracleEntry {
  std::string label;
  double analytic = 0.0;
  double oracle = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
};
struct OracleReport {
  std::vector<OracleEntry> entries;
  double rmax = 0.0;
  int npoints = 0;

  void append(const std::string &label, double analytic, double oracle_value);
  double max_abs_error() const;
  bool all_within(double tol_abs) const;
};

} // namespace dunkl::oracle
