#include "dunkl/oracle.hpp"

#include "dunkl/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dunkl::oracle {

namespace {

SymTridiag fd_matrix(const std::function<double(double)> &veff, const RadialGrid &grid) {
  const int n = grid.npoints;
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  SymTridiag t;
  t.diag.resize(static_cast<size_t>(n));
  t.off.assign(static_cast<size_t>(n) - 1, -inv_h2);
  for (int i = 0; i < n; ++i) {
    double r = grid.node(i);
    double v = veff(r);
    if (!std::isfinite(v))
      throw std::runtime_error("potential not finite at r = " + std::to_string(r));
    t.diag[static_cast<size_t>(i)] = 2.0 * inv_h2 + v;
  }
  return t;
}

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on the recurrence.
struct GaussRule {
  std::vector<double> x, w;
};

GaussRule gauss_rule(int npts) {
  GaussRule g;
  g.x.resize(static_cast<size_t>(npts));
  g.w.resize(static_cast<size_t>(npts));
  for (int i = 0; i < npts; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (npts + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (npts == 1) p1 = x;
      for (int j = 2; j <= npts; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = npts * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    g.x[static_cast<size_t>(i)] = x;
    g.w[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return g;
}

const GaussRule &rule16() {
  static const GaussRule r = gauss_rule(16);
  return r;
}
const GaussRule &rule32() {
  static const GaussRule r = gauss_rule(32);
  return r;
}

double panel_integral(const std::function<double(double)> &f, double a, double b,
                      const GaussRule &g) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < g.x.size(); ++i) sum += g.w[i] * f(mid + half * g.x[i]);
  return half * sum;
}

double adaptive_panel(const std::function<double(double)> &f, double a, double b, double tol,
                      int depth) {
  double coarse = panel_integral(f, a, b, rule16());
  double fine = panel_integral(f, a, b, rule32());
  if (std::fabs(fine - coarse) <= tol || depth >= 10) return fine;
  double mid = 0.5 * (a + b);
  return adaptive_panel(f, a, mid, 0.5 * tol, depth + 1) +
         adaptive_panel(f, mid, b, 0.5 * tol, depth + 1);
}

// Integral over (0, rcut] with a geometric ladder toward 0, deep enough that
// the mass of the weight singularity x^w below the last edge is negligible:
// (2^-J)^(w+1) <= 1e-18.
double halfline_integral(const std::function<double(double)> &f, double rcut, double w_exponent) {
  int ladder = static_cast<int>(std::ceil(18.0 / (0.30103 * (w_exponent + 1.0))));
  ladder = std::clamp(ladder, 60, 2400);
  std::vector<double> edges;
  edges.push_back(0.0);
  for (int j = ladder; j >= 0; --j) edges.push_back(rcut * std::ldexp(1.0, -j));

  // The refinement tolerance has to scale with the integrand's mass, not the
  // signed total: orthogonality integrals vanish by cancellation.
  double mass = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    mass += std::fabs(panel_integral(f, edges[i], edges[i + 1], rule32()));
  double tol = std::max(mass, 1e-280) * 1e-13;

  double total = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    total += adaptive_panel(f, edges[i], edges[i + 1], tol, 0);
  return total;
}

double combined_rcut(const Gauge &gauge, double w_exponent, int poly_degree) {
  auto m = [&gauge](double x) { return gauge.exponent(x); };
  double R = 2.0;
  for (int it = 0; it < 200; ++it) {
    double mmin = 0.0;
    for (int i = 0; i <= 256; ++i) mmin = std::min(mmin, m(R * i / 256.0));
    double need = 80.0 + std::max(0.0, (w_exponent + poly_degree) * std::log(1.0 + R));
    if (m(R) - mmin >= need) return R;
    R *= 1.25;
  }
  throw std::runtime_error("divergent inner product");
}

} // namespace

RadialGrid::RadialGrid(double rmax_, int npoints_) : rmax(rmax_), npoints(npoints_) {
  if (!(rmax > 0.0)) throw std::invalid_argument("rmax must be > 0");
  if (npoints < 200) throw std::invalid_argument("npoints must be >= 200");
}

std::vector<double> fd_eigen_radial(const std::function<double(double)> &veff,
                                    const RadialGrid &grid, int m) {
  if (m < 1 || m > grid.npoints)
    throw std::invalid_argument("requested eigenvalue count exceeds grid size");
  SymTridiag t = fd_matrix(veff, grid);
  return eig_tridiag_bisect(t, m);
}

std::vector<double> fd_eigenvector(const std::function<double(double)> &veff,
                                   const RadialGrid &grid, double eigenvalue) {
  SymTridiag t = fd_matrix(veff, grid);
  return inverse_iteration(t, eigenvalue);
}

int count_nodes(const std::vector<double> &samples) {
  double mx = 0.0;
  for (double v : samples) mx = std::max(mx, std::fabs(v));
  if (mx == 0.0) return 0;
  int nodes = 0;
  int last_sign = 0;
  for (double v : samples) {
    if (std::fabs(v) < 1e-6 * mx) continue;
    int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

RichardsonEigen fd_eigen_richardson(const std::function<double(double)> &veff,
                                    const RadialGrid &grid, int m) {
  RichardsonEigen r;
  r.coarse = fd_eigen_radial(veff, grid, m);
  r.fine = fd_eigen_radial(veff, grid.refined(), m);
  r.extrapolated.resize(static_cast<size_t>(m));
  r.error_estimate.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    size_t ui = static_cast<size_t>(i);
    r.extrapolated[ui] = r.fine[ui] + (r.fine[ui] - r.coarse[ui]) / 3.0;
    r.error_estimate[ui] = std::fabs(r.fine[ui] - r.coarse[ui]) / 3.0;
  }
  return r;
}

double fd_convergence_order(const std::function<double(double)> &veff, const RadialGrid &grid,
                            int index) {
  RadialGrid g1 = grid, g2 = g1.refined(), g3 = g2.refined();
  double e1 = fd_eigen_radial(veff, g1, index + 1)[static_cast<size_t>(index)];
  double e2 = fd_eigen_radial(veff, g2, index + 1)[static_cast<size_t>(index)];
  double e3 = fd_eigen_radial(veff, g3, index + 1)[static_cast<size_t>(index)];
  return std::log2(std::fabs((e1 - e2) / (e2 - e3)));
}

std::function<double(double)> line_gauged_potential(const DunklParams &p, const Parity &eps,
                                                    const GaugeParams &g, int n) {
  double l = line_effective_l(p, eps).l;
  double a = g.a, b = g.b;
  double quad = b * b - (2.0 * l + 5.0 + 4.0 * n) * a;
  double cent = l * (l + 1.0);
  return [=](double r) {
    double r2 = r * r;
    return a * a * r2 * r2 * r2 + 2.0 * a * b * r2 * r2 + quad * r2 + cent / r2;
  };
}

std::function<double(double)> plane_oscillator_gauged_potential(const PlaneSector &sector,
                                                                const GaugeParams &g, int n) {
  double l = sector.effective_l().l;
  double a = g.a, b = g.b;
  double quad = b * b - (2.0 * l + 5.0 + 4.0 * n) * a;
  double cent = l * (l + 1.0);
  return [=](double r) {
    double r2 = r * r;
    return a * a * r2 * r2 * r2 + 2.0 * a * b * r2 * r2 + quad * r2 + cent / r2;
  };
}

std::function<double(double)> plane_coulomb_gauged_potential(const PlaneSector &sector,
                                                             const GaugeParams &g, int n,
                                                             double alpha_k) {
  (void)n;
  double l = sector.effective_l().l;
  double a = g.a, b = g.b;
  double coul = b * (2.0 * l + 2.0) + alpha_k;
  double cent = l * (l + 1.0);
  return [=](double r) { return a * a * r * r + 2.0 * a * b * r - coul / r + cent / (r * r); };
}

std::function<double(double)> es_oscillator_gauged_potential(double l) {
  double cent = l * (l + 1.0);
  return [=](double r) { return r * r + cent / (r * r); };
}

std::function<double(double)> es_coulomb_gauged_potential(const PlaneSector &sector,
                                                          double alpha_coupling) {
  double l = sector.effective_l().l;
  double cent = l * (l + 1.0);
  return [=](double r) { return -alpha_coupling / r + cent / (r * r); };
}

RadialGrid default_oscillator_grid(const GaugeParams &g) {
  double y = (g.a > 0.0) ? (-g.b + std::sqrt(g.b * g.b + 320.0 * g.a)) / g.a : 160.0 / g.b;
  double rmax = std::max(std::sqrt(y), 6.0);
  int npts = std::clamp(static_cast<int>(rmax / 0.002), 2000, 8000);
  return RadialGrid(rmax, npts);
}

RadialGrid default_coulomb_grid(const GaugeParams &g) {
  double rmax = (g.a > 0.0) ? (-g.b + std::sqrt(g.b * g.b + 160.0 * g.a)) / g.a : 80.0 / g.b;
  rmax = std::max(rmax, 10.0);
  int npts = std::clamp(static_cast<int>(rmax / 0.004), 2000, 10000);
  return RadialGrid(rmax, npts);
}

RadialGrid default_es_coulomb_grid(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  double rmax = 90.0 / beta;
  int npts = std::clamp(static_cast<int>(rmax / 0.01), 2000, 16000);
  return RadialGrid(rmax, npts);
}

double weighted_inner_product(const QuasiPolynomial &f, const QuasiPolynomial &g,
                              const Weight &w) {
  if (!(w.exponent > -1.0)) throw std::runtime_error("divergent inner product");
  Gauge combined{f.gauge.quartic + g.gauge.quartic, f.gauge.quadratic + g.gauge.quadratic,
                 f.gauge.linear + g.gauge.linear};
  if (!combined.decays()) throw std::runtime_error("divergent inner product");

  std::vector<double> prod = poly_mul(f.coeffs, g.coeffs);
  double fold = 1.0;
  if (w.kind == Weight::Kind::line) {
    if (!f.gauge.even() || !g.gauge.even())
      throw std::invalid_argument("line inner products need reflection-even gauges");
    // int_-inf^inf = 2 * int_0^inf of the even part.
    for (size_t m = 1; m < prod.size(); m += 2) prod[m] = 0.0;
    fold = 2.0;
  }
  int deg = 0;
  for (size_t m = 0; m < prod.size(); ++m)
    if (prod[m] != 0.0) deg = static_cast<int>(m);
  double rcut = combined_rcut(combined, w.exponent, deg);
  auto integrand = [&](double x) {
    return std::pow(x, w.exponent) * poly_eval(prod, x) * combined.factor(x);
  };
  return fold * halfline_integral(integrand, rcut, w.exponent);
}

double weighted_norm(const QuasiPolynomial &f, const Weight &w) {
  return std::sqrt(weighted_inner_product(f, f, w));
}

double residual_meter(const std::function<LaurentCoeffs(const QuasiPolynomial &)> &apply_h,
                      const QuasiPolynomial &psi, double energy) {
  double scale = psi.max_abs_coeff();
  if (scale == 0.0) throw std::invalid_argument("zero wavefunction");
  LaurentCoeffs lhs = apply_h(psi);
  LaurentCoeffs rhs = laurent_scale(-energy, to_laurent(psi));
  double num = laurent_max_abs(laurent_add(lhs, rhs));
  // Denominator ||E psi|| per the contract, floored at ||psi|| so an exact
  // zero eigenvalue stays well-defined.
  return num / (scale * std::max(std::fabs(energy), 1.0));
}

namespace {

PositionAudit oscillator_audit(const std::vector<double> &gauged,
                               const std::function<double(double)> &veff, const RadialGrid &grid,
                               int n) {
  PositionAudit audit;
  audit.analytic = gauged;
  int m = n + 3;
  RichardsonEigen rich = fd_eigen_richardson(veff, grid, m);
  audit.fd = rich.extrapolated;
  audit.positions.resize(gauged.size(), 0);
  audit.all_among_lowest = true;
  for (size_t i = 0; i < gauged.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int pos = 0;
    for (size_t j = 0; j < audit.fd.size(); ++j) {
      double d = std::fabs(gauged[i] - audit.fd[j]);
      if (d < best) {
        best = d;
        pos = static_cast<int>(j) + 1;
      }
    }
    bool matched = best <= 1e-3 * std::max(1.0, std::fabs(gauged[i]));
    audit.positions[i] = matched ? pos : 0;
    if (!matched || pos > n + 1) audit.all_among_lowest = false;
  }
  return audit;
}

} // namespace

PositionAudit audit_line(const DunklParams &p, const Parity &eps, const GaugeParams &g, int n) {
  auto sols = qes::solve_line_qes(p, eps, g, n);
  std::vector<double> gauged;
  for (const auto &s : sols) gauged.push_back(2.0 * s.energy);
  return oscillator_audit(gauged, line_gauged_potential(p, eps, g, n),
                          default_oscillator_grid(g), n);
}

PositionAudit audit_plane_oscillator(const PlaneSector &sector, const GaugeParams &g, int n) {
  auto sols = qes::solve_plane_oscillator_qes(sector, g, n);
  std::vector<double> gauged;
  for (const auto &s : sols) gauged.push_back(2.0 * s.energy);
  return oscillator_audit(gauged, plane_oscillator_gauged_potential(sector, g, n),
                          default_oscillator_grid(g), n);
}

PositionAudit audit_plane_coulomb(const PlaneSector &sector, const GaugeParams &g, int n) {
  auto sols = qes::solve_plane_coulomb_qes(sector, g, n);
  PositionAudit audit;
  audit.all_among_lowest = true;
  RadialGrid grid = default_coulomb_grid(g);
  for (const auto &s : sols) {
    double gauged = 2.0 * s.energy;
    audit.analytic.push_back(gauged);
    RichardsonEigen rich =
        fd_eigen_richardson(plane_coulomb_gauged_potential(sector, g, n, s.alpha), grid, n + 3);
    double best = std::numeric_limits<double>::infinity();
    int pos = 0;
    for (size_t j = 0; j < rich.extrapolated.size(); ++j) {
      double d = std::fabs(gauged - rich.extrapolated[j]);
      if (d < best) {
        best = d;
        pos = static_cast<int>(j) + 1;
      }
    }
    bool matched = best <= 1e-3 * std::max(1.0, std::fabs(gauged));
    audit.positions.push_back(matched ? pos : 0);
    audit.fd.push_back(matched ? rich.extrapolated[static_cast<size_t>(pos - 1)]
                               : std::numeric_limits<double>::quiet_NaN());
    if (!matched || pos > n + 1) audit.all_among_lowest = false;
  }
  return audit;
}

void OracleReport::append(const std::string &label, double analytic, double oracle_value) {
  OracleEntry e;
  e.label = label;
  e.analytic = analytic;
  e.oracle = oracle_value;
  e.abs_error = std::fabs(analytic - oracle_value);
  e.rel_error = e.abs_error / std::max(std::fabs(analytic), 1e-300);
  entries.push_back(std::move(e));
}

double OracleReport::max_abs_error() const {
  double mx = 0.0;
  for (const auto &e : entries) mx = std::max(mx, e.abs_error);
  return mx;
}

bool OracleReport::all_within(double tol_abs) const {
  for (const auto &e : entries)
    if (e.abs_error > tol_abs) return false;
  return true;
}

} // namespace dunkl::oracle
